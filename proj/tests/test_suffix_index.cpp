#include <doctest.h>

#include "netocc/oracle.hpp"
#include "netocc/sliding_index.hpp"
#include "netocc/ukk_index.hpp"
#include "support.hpp"

using namespace netocc;
using namespace testing_support;

namespace {

Interval shift(Interval iv, Pos base) { return {iv.start + base - 1, iv.end + base - 1}; }

// Compare every query of an index over window text `w` starting at `base`.
template <class Index>
void check_against_oracle(const Index& idx, const std::string& w, Pos base, bool prefix_side) {
    INFO("window=", w, " base=", base);
    auto s = oracle::lr_sq_ends(w);
    REQUIRE(idx.lrs_len() == s.lrs);
    REQUIRE(idx.lrs_occ_is_two() == s.lrs_two);
    if (s.lrs_two) REQUIRE(idx.lrs_nonsuffix_occ() == shift(s.lrs_other, base));
    REQUIRE(idx.sqs_len() == s.sqs);
    REQUIRE(idx.sqs_occ_is_two() == (s.sqs_occ == 2));
    if (s.sqs_occ == 2) REQUIRE(idx.sqs_nonsuffix_occ() == shift(s.sqs_other, base));
    if (!w.empty()) {
        auto tr = idx.tail_run();
        REQUIRE(tr.exp == s.exp);
        REQUIRE(tr.unique == s.exp_unique);
    }
    if (prefix_side) {
        auto ps = idx.prefix_state();
        REQUIRE(ps.lrp_len == s.lrp);
        REQUIRE(ps.lrp_two == s.lrp_two);
        if (s.lrp_two) REQUIRE(ps.lrp_other == shift(s.lrp_other, base));
        REQUIRE(ps.sqp_len == s.sqp);
        REQUIRE(ps.sqp_occ == s.sqp_occ);
        if (s.sqp_occ == 2) REQUIRE(ps.sqp_other == shift(s.sqp_other, base));
        if (!w.empty()) {
            REQUIRE(ps.head_exp == s.exp_head);
            REQUIRE(ps.head_unique == s.exp_head_unique);
        }
    }
    idx.audit();
}

void check_counts(const auto& idx, const std::string& w, Pos base, std::mt19937_64& rng) {
    Pos n = static_cast<Pos>(w.size());
    for (int t = 0; t < 6; ++t) {
        Pos a = 1 + static_cast<Pos>(rng() % static_cast<std::uint64_t>(n + 1));
        Pos len = static_cast<Pos>(rng() % static_cast<std::uint64_t>(n - a + 2));
        std::string pat = w.substr(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(len));
        std::size_t want = oracle::occ(w, pat);
        for (std::size_t cap : {1u, 2u, 3u, 5u})
            REQUIRE(idx.occ_count_capped({a + base - 1, a + len - 1 + base - 1}, cap) == std::min(want, cap));
    }
}

}  // namespace

TEST_CASE("ukk examples") {
    UkkIndex idx;
    for (char c : std::string("abbbabbabbab")) idx.append(static_cast<Symbol>(c));
    CHECK(idx.lrs_len() == 7);
    CHECK(idx.lrs_occ_is_two());
    CHECK(idx.lrs_nonsuffix_occ() == Interval{3, 9});
    CHECK(idx.sqs_len() == 5);
    CHECK(idx.sqs_occ_is_two());
    CHECK(idx.sqs_nonsuffix_occ().start == 5);

    UkkIndex a;
    a.append('a');
    CHECK(a.lrs_len() == 0);
    CHECK(a.node_count() == 2);
    a.append('a');
    CHECK(a.lrs_len() == 1);

    UkkIndex abc;
    for (char c : std::string("abc")) abc.append(static_cast<Symbol>(c));
    CHECK(abc.tail_run().exp == 1);
    CHECK(abc.tail_run().unique);
    CHECK(abc.tail_run_for('a').exp == 0);
    CHECK_FALSE(abc.tail_run_for('a').unique);
}

TEST_CASE("ukk agrees with oracle on every prefix") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 10; ++n)
        each_string(n, 2, [&](const std::string& s) {
            UkkIndex idx;
            for (std::size_t i = 0; i < s.size(); ++i) {
                idx.append(static_cast<Symbol>(s[i]));
                check_against_oracle(idx, s.substr(0, i + 1), 1, true);
            }
            check_counts(idx, s, 1, rng);
        });
    for (int k = 0; k < 300; ++k) {
        int sigma = 2 + static_cast<int>(rng() % 4);
        auto s = random_string(rng, 1 + rng() % 70, sigma);
        UkkIndex idx;
        for (std::size_t i = 0; i < s.size(); ++i) {
            idx.append(static_cast<Symbol>(s[i]));
            check_against_oracle(idx, s.substr(0, i + 1), 1, true);
            check_counts(idx, s.substr(0, i + 1), 1, rng);
        }
    }
}

TEST_CASE("sliding examples") {
    SlidingIndex idx(8);
    for (char c : std::string("abcc")) idx.append(static_cast<Symbol>(c));
    idx.delete_leftmost();
    CHECK(idx.lrs_len() == 1);
    CHECK(idx.first() == 2);
    CHECK(idx.occ_count_capped({3, 3}, 3) == 2);

    SlidingIndex ab(4);
    ab.append('a');
    ab.append('b');
    CHECK(ab.occ_count_capped({2, 1}, 2) == 2);
    ab.append('a');
    CHECK(ab.prefix_state().lrp_len == 1);

    SlidingIndex run(16);
    for (char c : std::string("abbbabbabbab")) run.append(static_cast<Symbol>(c));
    auto ps = run.prefix_state();
    CHECK(ps.lrp_len == 3);
    CHECK(ps.sqp_len == 4);
    CHECK(ps.sqp_occ == 1);
    CHECK(run.occ_count_capped({3, 9}, 3) == 2);
    run.delete_leftmost();
    UkkIndex fresh;
    for (char c : std::string("bbbabbabbab")) fresh.append(static_cast<Symbol>(c));
    CHECK(run.canonical() == fresh.canonical());
}

TEST_CASE("sliding agrees with oracle under random interleavings") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 400; ++k) {
        int sigma = 2 + static_cast<int>(rng() % 3);
        Pos d = 1 + static_cast<Pos>(rng() % 12);
        auto stream = random_string(rng, 5 + rng() % 80, sigma);
        SlidingIndex idx(d);
        std::string window;
        Pos base = 1;
        std::size_t next = 0;
        while (next < stream.size()) {
            bool del = !window.empty() && (idx.full() || rng() % 3 == 0);
            if (del) {
                idx.delete_leftmost();
                window.erase(0, 1);
                ++base;
            } else {
                idx.append(static_cast<Symbol>(stream[next]));
                window.push_back(stream[next++]);
            }
            check_against_oracle(idx, window, base, true);
            if (!window.empty()) check_counts(idx, window, base, rng);
            UkkIndex fresh;
            for (char c : window) fresh.append(static_cast<Symbol>(c));
            REQUIRE(idx.canonical() == fresh.canonical());
        }
    }
}
