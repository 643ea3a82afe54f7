#include <doctest.h>

#include <set>

#include "netocc/mus_bridge.hpp"
#include "netocc/oracle.hpp"
#include "support.hpp"

using namespace netocc;
using namespace testing_support;

namespace {

void check_text(const std::string& t) {
    INFO("text=", t);
    auto eno = oracle::fast_eno(t);
    auto mus = oracle::fast_mus(t);
    auto s = oracle::lr_sq_ends(t);
    auto n = static_cast<Pos>(t.size());
    REQUIRE(eno.size() + 1 == mus.size());
    REQUIRE(mus_to_eno(mus) == eno);
    REQUIRE(eno_to_mus(eno, s.lrp, s.lrs, n) == mus);
}

}  // namespace

TEST_CASE("mus: conversion examples") {
    CHECK(mus_to_eno(ivs({{2, 4}, {5, 10}})) == ivs({{2, 10}}));
    CHECK(mus_to_eno(ivs({{1, 1}, {2, 4}})) == ivs({{1, 4}}));
    CHECK(mus_to_eno(ivs({{1, 3}})).empty());
    CHECK(eno_to_mus(ivs({{2, 10}}), 3, 7, 12) == ivs({{2, 4}, {5, 10}}));
    CHECK(eno_to_mus({}, 2, 2, 4) == ivs({{2, 3}}));
    CHECK(eno_to_mus({}, 2, 2, 3) == ivs({{1, 3}}));
    CHECK_THROWS_AS(mus_to_eno(ivs({{2, 4}, {1, 5}})), PreconditionError);
    CHECK_THROWS_AS(eno_to_mus({}, 5, 0, 3), PreconditionError);
}

TEST_CASE("mus: round trips against the oracle") {
    for (int n = 1; n <= 12; ++n) each_string(n, 2, check_text);
    for (int n = 1; n <= 7; ++n) each_string(n, 3, check_text);
}

TEST_CASE("mus: online maintenance") {
    auto final_mus = [](const std::string& t) {
        OnlineMus om;
        for (char ch : t) om.append(static_cast<Symbol>(ch));
        return om.snapshot();
    };
    CHECK(final_mus("abbbabbabbab") == ivs({{2, 4}, {5, 10}}));
    CHECK(final_mus("ab") == ivs({{1, 1}, {2, 2}}));
    CHECK(final_mus("a") == ivs({{1, 1}}));

    std::mt19937_64 rng(3);
    for (int it = 0; it < 400; ++it) {
        std::string t = random_string(rng, 1 + rng() % 80, 2 + static_cast<int>(rng() % 4));
        OnlineMus om(true);
        std::string pre;
        for (char ch : t) {
            om.append(static_cast<Symbol>(ch));
            pre.push_back(ch);
            INFO("prefix=", pre);
            REQUIRE(om.snapshot() == oracle::fast_mus(pre));
            REQUIRE(om.size() == om.engine().eno().size() + 1);
        }
        std::set<Interval> replayed;
        for (const auto& ev : om.log()) {
            if (ev.kind == EventKind::add)
                REQUIRE(replayed.insert(ev.interval).second);
            else
                REQUIRE(replayed.erase(ev.interval) == 1);
        }
        REQUIRE(std::vector<Interval>(replayed.begin(), replayed.end()) == om.snapshot());
    }
}
