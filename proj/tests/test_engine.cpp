#include <doctest.h>

#include "netocc/cdawg_index.hpp"
#include "netocc/eno_engine.hpp"
#include "netocc/oracle.hpp"
#include "netocc/sliding_index.hpp"
#include "netocc/ukk_index.hpp"
#include "support.hpp"

using namespace netocc;
using namespace testing_support;

namespace {

template <class Backend>
std::vector<Interval> final_eno(const std::string& t) {
    EnoEngine<Backend> eng(false);
    for (char ch : t) eng.append_char(static_cast<Symbol>(ch));
    return eng.snapshot();
}

// Online run checked after every append; returns the event stream.
template <class Backend>
std::vector<DiffEvent> check_online(const std::string& t) {
    EnoEngine<Backend> eng(true);
    oracle::PrefixEno ref;
    for (char ch : t) {
        std::size_t before = eng.eno().size();
        eng.append_char(static_cast<Symbol>(ch));
        ref.push(ch);
        INFO("prefix=", ref.text());
        REQUIRE(eng.snapshot() == ref.eno());
        auto delta = static_cast<long>(eng.eno().size()) - static_cast<long>(before);
        REQUIRE(delta >= -1);
        REQUIRE(delta <= 2);
        eng.audit();
    }
    REQUIRE(EnoSet::replay(eng.eno().log()).snapshot() == eng.snapshot());
    return eng.eno().log();
}

void check_sliding(const std::string& t, Pos d) {
    EnoEngine<SlidingIndex> eng(false, d);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (eng.index().full()) {
            std::size_t before = eng.eno().size();
            eng.delete_leftmost_char();
            Pos lo = eng.index().first();
            std::string w = t.substr(static_cast<std::size_t>(lo - 1), i - static_cast<std::size_t>(lo - 1));
            INFO("after delete, window=", w, " base=", lo);
            REQUIRE(eng.snapshot() == oracle::window_eno(w, lo));
            auto delta = static_cast<long>(eng.eno().size()) - static_cast<long>(before);
            REQUIRE(std::abs(delta) <= 2);
        }
        eng.append_char(static_cast<Symbol>(t[i]));
        Pos lo = eng.index().first();
        std::string w = t.substr(static_cast<std::size_t>(lo - 1), i + 2 - static_cast<std::size_t>(lo));
        INFO("after append, window=", w, " base=", lo);
        REQUIRE(eng.snapshot() == oracle::window_eno(w, lo));
        eng.audit();
    }
}

}  // namespace

TEST_CASE("engine: append examples") {
    CHECK(final_eno<UkkIndex>("ab") == ivs({{1, 2}}));
    CHECK(final_eno<UkkIndex>("abcc") == ivs({{1, 2}, {2, 4}}));
    CHECK(final_eno<UkkIndex>("aba").empty());
    CHECK(final_eno<UkkIndex>("baaa") == ivs({{1, 4}}));
    CHECK(final_eno<UkkIndex>("abbbabbabbab") == ivs({{2, 10}}));
    CHECK(final_eno<CdawgIndex>("abbbabbabbab") == ivs({{2, 10}}));
    CHECK(final_eno<UkkIndex>("aaa").empty());
    CHECK(final_eno<UkkIndex>("").empty());
}

TEST_CASE("engine: delete examples") {
    auto run = [](const std::string& w) {
        EnoEngine<SlidingIndex> eng(false, static_cast<Pos>(w.size()));
        for (char ch : w) eng.append_char(static_cast<Symbol>(ch));
        eng.delete_leftmost_char();
        return eng.snapshot();
    };
    CHECK(run("aab") == ivs({{2, 3}}));
    CHECK(run("abcc") == ivs({{2, 4}}));
    CHECK(run("abcd") == ivs({{2, 3}, {3, 4}}));

    EnoEngine<SlidingIndex> eng(false, 3);
    std::vector<std::vector<Interval>> seen;
    for (char ch : std::string("abcc")) {
        eng.slide(static_cast<Symbol>(ch));
        seen.push_back(eng.snapshot());
    }
    CHECK(seen.back() == oracle::window_eno("bcc", 2));
}

TEST_CASE("engine: exhaustive binary online, both backends agree") {
    for (int n = 1; n <= 11; ++n)
        each_string(n, 2, [&](const std::string& t) {
            auto a = check_online<UkkIndex>(t);
            auto b = check_online<CdawgIndex>(t);
            REQUIRE(a == b);
        });
}

TEST_CASE("engine: random online") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        int sigma = 2 + static_cast<int>(rng() % 5);
        std::string t = random_string(rng, 1 + rng() % 120, sigma);
        auto a = check_online<UkkIndex>(t);
        auto b = check_online<CdawgIndex>(t);
        REQUIRE(a == b);
    }
}

TEST_CASE("engine: sliding windows") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 600; ++it) {
        int sigma = 2 + static_cast<int>(rng() % 3);
        Pos d = 1 + static_cast<Pos>(rng() % 12);
        std::string t = random_string(rng, 1 + rng() % 60, sigma);
        INFO("text=", t, " d=", d);
        check_sliding(t, d);
    }
    for (Pos d = 1; d <= 5; ++d)
        for (int n = 1; n <= 9; ++n) each_string(n, 2, [&](const std::string& t) { check_sliding(t, d); });
}
