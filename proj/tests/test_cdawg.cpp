#include <doctest.h>

#include <map>
#include <set>

#include "netocc/cdawg_index.hpp"
#include "netocc/oracle.hpp"
#include "support.hpp"

using namespace netocc;
using namespace testing_support;

namespace {

CdawgIndex build(const std::string& t) {
    CdawgIndex g;
    for (char ch : t) g.append(static_cast<Symbol>(ch));
    return g;
}

using Adj = std::map<CdawgIndex::NodeId, std::vector<CdawgIndex::EdgeInfo>>;

int brute_paths(const Adj& adj, CdawgIndex::NodeId v) {
    if (v == CdawgIndex::kSink) return 1;
    int n = 0;
    auto it = adj.find(v);
    if (it != adj.end())
        for (const auto& e : it->second) n = std::min(3, n + brute_paths(adj, e.to));
    return n;
}

void spell(const Adj& adj, const std::string& t, CdawgIndex::NodeId v, const std::string& pre,
           std::multiset<std::string>& out) {
    auto it = adj.find(v);
    if (it == adj.end()) return;
    for (const auto& e : it->second) {
        std::string s = pre;
        for (Pos p = e.label.start; p <= e.label.end; ++p) {
            s.push_back(t[static_cast<std::size_t>(p - 1)]);
            out.insert(s);
        }
        spell(adj, t, e.to, s, out);
    }
}

void check(const CdawgIndex& g, const std::string& t, bool deep) {
    INFO("text=", t);
    g.audit();
    auto s = oracle::lr_sq_ends(t);
    REQUIRE(g.lrs_len() == s.lrs);
    REQUIRE(g.lrs_occ_is_two() == s.lrs_two);
    if (s.lrs_two) REQUIRE(g.lrs_nonsuffix_occ() == s.lrs_other);
    REQUIRE(g.sqs_len() == s.sqs);
    REQUIRE(g.sqs_occ_is_two() == (s.sqs_occ == 2));
    if (s.sqs_occ == 2) REQUIRE(g.sqs_nonsuffix_occ() == s.sqs_other);
    REQUIRE(g.lrpref_len() == s.lrp);
    auto tr = g.tail_run();
    REQUIRE(tr.exp == s.exp);
    REQUIRE(tr.unique == s.exp_unique);
    REQUIRE(g.edge_count() == oracle::implicit_cdawg_edges(t));
    if (!deep) return;

    Adj adj;
    for (const auto& e : g.edges()) adj[e.from].push_back(e);
    for (const auto& [v, _] : adj) REQUIRE(g.sat_paths(v) == brute_paths(adj, v));
    REQUIRE(g.sat_paths(CdawgIndex::kSource) == brute_paths(adj, CdawgIndex::kSource));

    std::multiset<std::string> spelled;
    spell(adj, t, CdawgIndex::kSource, "", spelled);
    std::set<std::string> subs;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j <= t.size(); ++j) subs.insert(t.substr(i, j - i));
    REQUIRE(spelled.size() == subs.size());
    REQUIRE(std::set<std::string>(spelled.begin(), spelled.end()) == subs);
}

}  // namespace

TEST_CASE("cdawg: small edge counts and lrPref") {
    CHECK(build("a").edge_count() == 1);
    CHECK(build("ab").edge_count() == 2);
    CHECK(build("aaa").edge_count() == 1);
    CHECK(build("abbbabbabbab").lrpref_len() == 3);
    CHECK(build("abab").lrpref_len() == 2);
}

TEST_CASE("cdawg: end state of the running example") {
    auto g = build("abbbabbabbab");
    CHECK(g.lrs_len() == 7);
    CHECK(g.lrs_nonsuffix_occ() == Interval{3, 9});
    CHECK(g.sqs_len() == 5);
    CHECK(g.sqs_occ_is_two());
    CHECK(g.sqs_nonsuffix_occ().start == 5);
}

TEST_CASE("cdawg: every prefix of every short binary/ternary string") {
    for (int n = 1; n <= 10; ++n)
        each_string(n, 2, [&](const std::string& t) {
            CdawgIndex g;
            std::size_t prev = 0, prev_structural = 0;
            for (std::size_t i = 0; i < t.size(); ++i) {
                g.append(static_cast<Symbol>(t[i]));
                std::string pre = t.substr(0, i + 1);
                check(g, pre, n <= 8);
                REQUIRE(g.edge_count() >= prev);
                REQUIRE(g.edge_count() <= oracle::explicit_cdawg_edges(pre));
                prev = g.edge_count();
                REQUIRE(g.structural_edge_count() >= prev_structural);
                REQUIRE(g.structural_edge_count() >= g.edge_count());
                REQUIRE(g.structural_edge_count() <= oracle::explicit_cdawg_edges(pre));
                prev_structural = g.structural_edge_count();
            }
        });
    for (int n = 1; n <= 6; ++n)
        each_string(n, 3, [&](const std::string& t) { check(build(t), t, true); });
}

TEST_CASE("cdawg: random strings") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; ++it) {
        int sigma = 2 + static_cast<int>(rng() % 4);
        std::string t = random_string(rng, 1 + rng() % 40, sigma);
        CdawgIndex g;
        for (std::size_t i = 0; i < t.size(); ++i) {
            g.append(static_cast<Symbol>(t[i]));
            check(g, t.substr(0, i + 1), i < 14);
        }
    }
}
