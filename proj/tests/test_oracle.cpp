#include <doctest.h>

#include "netocc/oracle.hpp"
#include "support.hpp"

using namespace netocc;
using namespace testing_support;

TEST_CASE("oracle occ") {
    CHECK(oracle::occ("abbbabbabbab", "bbabbab") == 2);
    CHECK(oracle::occ("ab", "") == 3);
    CHECK(oracle::occ("aaa", "aa") == 2);
}

TEST_CASE("oracle eno and mus examples") {
    CHECK(oracle::eno("abcc") == ivs({{1, 2}, {2, 4}}));
    CHECK(oracle::eno("aaa").empty());
    CHECK(oracle::eno("ab") == ivs({{1, 2}}));
    CHECK(oracle::eno("abbbabbabbab") == ivs({{2, 10}}));
    CHECK(oracle::eno("baaa") == ivs({{1, 4}}));
    CHECK(oracle::mus("abbbabbabbab") == ivs({{2, 4}, {5, 10}}));
    CHECK(oracle::mus("ab") == ivs({{1, 1}, {2, 2}}));
    CHECK(oracle::mus("aaa") == ivs({{1, 3}}));
    CHECK(oracle::mus("abab") == ivs({{2, 3}}));
}

TEST_CASE("oracle end state on the running example") {
    auto s = oracle::lr_sq_ends("abbbabbabbab");
    CHECK(s.lrs == 7);
    CHECK(s.lrs_two);
    CHECK(s.lrs_other == Interval{3, 9});
    CHECK(s.sqs == 5);
    CHECK(s.sqs_occ == 2);
    CHECK(s.sqs_other.start == 5);
    CHECK(s.lrp == 3);
    CHECK(s.sqp == 4);
    CHECK(s.sqp_occ == 1);

    auto aab = oracle::lr_sq_ends("aab");
    CHECK(aab.lrp == 1);
    CHECK(aab.lrp_other == Interval{2, 2});
    CHECK(aab.sqp == 1);
    CHECK(aab.sqp_other == Interval{2, 2});
    CHECK(oracle::lr_sq_ends("baaa").lrs == 2);
    CHECK(oracle::lr_sq_ends("baaa").lrs_other == Interval{2, 3});
    CHECK(oracle::lr_sq_ends("abcc").lrs_other == Interval{3, 3});
    CHECK(oracle::lr_sq_ends("aaa").lrs_two);
    CHECK_FALSE(oracle::lr_sq_ends("aab").lrs_two);
    CHECK(oracle::lr_sq_ends("aba").sqs_other == Interval{1, 1});
    CHECK(oracle::lr_sq_ends("ab").sqs == 1);
    CHECK(oracle::lr_sq_ends("ab").sqs_occ == 1);
}

TEST_CASE("oracle tail run") {
    CHECK(oracle::tail_run_for("abc", 'c') == std::pair<Pos, bool>{1, true});
    CHECK(oracle::tail_run_for("ab", 'a') == std::pair<Pos, bool>{0, false});
    CHECK(oracle::tail_run_for("baa", 'a') == std::pair<Pos, bool>{2, true});
}

TEST_CASE("oracle cdawg edge counts") {
    CHECK(oracle::implicit_cdawg_edges("a") == 1);
    CHECK(oracle::implicit_cdawg_edges("ab") == 2);
    CHECK(oracle::implicit_cdawg_edges("aaa") == 1);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        auto s = random_string(rng, 1 + rng() % 40, 2 + static_cast<int>(rng() % 3));
        CHECK(oracle::implicit_cdawg_edges(s) <= oracle::explicit_cdawg_edges(s));
    }
}

TEST_CASE("fast routes agree with the definitions") {
    for (int n = 1; n <= 11; ++n)
        each_string(n, 2, [](const std::string& s) {
            REQUIRE(oracle::fast_eno(s) == oracle::eno(s));
            REQUIRE(oracle::fast_mus(s) == oracle::mus(s));
        });
    std::mt19937_64 rng(11);
    for (int k = 0; k < 300; ++k) {
        auto s = random_string(rng, 1 + rng() % 60, 2 + static_cast<int>(rng() % 4));
        REQUIRE(oracle::fast_eno(s) == oracle::eno(s));
        REQUIRE(oracle::fast_mus(s) == oracle::mus(s));
        REQUIRE(oracle::eno(s).size() + 1 == oracle::mus(s).size());
        oracle::PrefixEno inc;
        for (char c : s) {
            inc.push(c);
            REQUIRE(inc.eno() == oracle::eno(inc.text()));
        }
        auto w = s.substr(s.size() / 3);
        auto shifted = oracle::eno(w);
        for (auto& iv : shifted) iv.start += 5, iv.end += 5;
        REQUIRE(oracle::window_eno(w, 6) == shifted);
    }
}

TEST_CASE("printed prefix-side lemma has a counterexample") {
    // "ba" = lrPref("babaa") loses uniqueness; sqPref("babaa") = "b".
    auto r = oracle::prepend_diff_audit("abaa", 'b', oracle::LemmaForm::printed);
    CHECK_FALSE(r.ok);
    CHECK(oracle::prepend_diff_audit("abaa", 'b').ok);
}

TEST_CASE("prepend audit small cases") {
    CHECK(oracle::prepend_diff_audit("ab", 'a').ok);
    CHECK(oracle::prepend_diff_audit("aab", 'a').ok);
    CHECK(oracle::prepend_diff_audit("b", 'a').ok);
    for (int n = 1; n <= 9; ++n)
        each_string(n, 2, [](const std::string& s) {
            for (char c : {'a', 'b'}) {
                auto r = oracle::prepend_diff_audit(s, c);
                INFO(s, " ", c, " ", (r.violations.empty() ? "" : r.violations[0]));
                REQUIRE(r.ok);
            }
        });
}

TEST_CASE("linear lrPref/lrSuf lengths") {
    for (int n = 0; n <= 11; ++n)
        each_string(n, 2, [](const std::string& t) {
            auto s = oracle::lr_sq_ends(t);
            auto [lrp, lrs] = oracle::fast_lr_lengths(t);
            INFO("text=", t);
            CHECK(lrp == s.lrp);
            CHECK(lrs == s.lrs);
        });
}
