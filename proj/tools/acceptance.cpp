// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "netocc/cdawg_index.hpp"
#include "netocc/eno_engine.hpp"
#include "netocc/harness.hpp"
#include "netocc/mus_bridge.hpp"
#include "netocc/oracle.hpp"
#include "netocc/sliding_index.hpp"
#include "netocc/ukk_index.hpp"

using namespace netocc;

namespace {

// Pinned parameters and tolerances.
constexpr int kExhaustiveMaxLen = 14;
constexpr double kExhaustiveSeconds = 60.0;
constexpr int kRandomPerSigma = 1000;
constexpr int kRandomMaxLen = 2000;
constexpr int kSigmas[] = {2, 4, 26};
constexpr Pos kWindows[] = {4, 16, 256};
constexpr std::uint64_t kSeed = 20240611;
constexpr int kCdawgOracleMaxLen = 200;
constexpr int kCdawgSamplingStride = 50;
constexpr std::size_t kBigStream = 10'000'000;
constexpr Pos kBigWindow = 1024;
constexpr double kPeakNodesPerWindow = 4.0;
constexpr double kSlidingSlowdown = 2.0;
constexpr std::size_t kScalingSizes[] = {1'000'000, 2'000'000, 4'000'000, 8'000'000, 10'000'000};
constexpr double kDoublingFactor = 2.2;  // allowed time growth per doubling of n
constexpr double kSnapshotSpread = 3.0;  // max/min per-element snapshot cost
constexpr double kPeriodicSnapshotShare = 0.01;
constexpr int kAuditPairs = 10'000;
constexpr int kAuditMaxLen = 16;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;
void report(int id, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

template <class F>
void each_binary(int max_len, F&& f) {
    for (int n = 1; n <= max_len; ++n)
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            std::string t(static_cast<std::size_t>(n), 'a');
            for (int i = 0; i < n; ++i)
                if (m >> i & 1) t[static_cast<std::size_t>(i)] = 'b';
            f(t);
        }
}

std::vector<std::string> random_suite() {
    std::vector<std::string> out;
    std::mt19937_64 rng(kSeed);
    for (int sigma : kSigmas)
        for (int i = 0; i < kRandomPerSigma; ++i) {
            std::size_t n = 1 + rng() % kRandomMaxLen;
            out.push_back(harness::random_text(n, sigma, rng()));
        }
    return out;
}

bool well_formed(const std::vector<Interval>& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].start <= s[i - 1].start || s[i].end <= s[i - 1].end || s[i].start > s[i - 1].end) return false;
    return true;
}

struct Tally {
    std::size_t strings = 0, steps = 0, mismatches = 0;
    std::size_t append_delta = 0, delete_delta = 0, shape = 0, snapshots = 0;
    std::string first;
    void fail(std::string what) {
        ++mismatches;
        if (first.empty()) first = std::move(what);
    }
};

// Online runs on both backends against the prefix oracle.
void online_check(const std::string& t, Tally& tl) {
    EnoEngine<UkkIndex> ukk(false);
    EnoEngine<CdawgIndex> cdawg(false);
    oracle::PrefixEno ref;
    ++tl.strings;
    for (char ch : t) {
        std::size_t before = ukk.eno().size();
        ukk.append_char(static_cast<Symbol>(ch));
        cdawg.append_char(static_cast<Symbol>(ch));
        ref.push(ch);
        ++tl.steps;
        auto want = ref.eno();
        auto a = ukk.snapshot();
        if (a != want) tl.fail("suffix tree on \"" + ref.text() + "\"");
        if (cdawg.snapshot() != want) tl.fail("cdawg on \"" + ref.text() + "\"");
        long d = static_cast<long>(a.size()) - static_cast<long>(before);
        if (d < -1 || d > 2) ++tl.append_delta;
        ++tl.snapshots;
        if (!well_formed(a)) ++tl.shape;
    }
}

void sliding_check(const std::string& t, Pos d, Tally& tl) {
    EnoEngine<SlidingIndex> eng(false, d);
    ++tl.strings;
    auto window = [&](std::size_t upto) {
        Pos lo = eng.index().first();
        return oracle::window_eno(std::string_view(t).substr(static_cast<std::size_t>(lo - 1), upto - static_cast<std::size_t>(lo - 1)), lo);
    };
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (eng.index().full()) {
            std::size_t before = eng.eno().size();
            eng.delete_leftmost_char();
            auto got = eng.snapshot();
            if (got != window(i)) tl.fail(fmt("sliding d=%lld delete at step %zu of \"%s\"", (long long)d, i + 1, t.c_str()));
            long delta = static_cast<long>(got.size()) - static_cast<long>(before);
            if (delta < -2 || delta > 2) ++tl.delete_delta;
            ++tl.snapshots;
            if (!well_formed(got)) ++tl.shape;
        }
        std::size_t before = eng.eno().size();
        eng.append_char(static_cast<Symbol>(t[i]));
        ++tl.steps;
        auto got = eng.snapshot();
        if (got != window(i + 1)) tl.fail(fmt("sliding d=%lld append at step %zu of \"%s\"", (long long)d, i + 1, t.c_str()));
        long delta = static_cast<long>(got.size()) - static_cast<long>(before);
        if (delta < -1 || delta > 2) ++tl.append_delta;
        ++tl.snapshots;
        if (!well_formed(got)) ++tl.shape;
    }
}

struct CountTally {
    std::size_t strings = 0, identity = 0, roundtrip = 0, online_mus = 0;
    std::string first;
    void fail(std::size_t& slot, const std::string& t) {
        ++slot;
        if (first.empty()) first = t;
    }
};

void counting_check(const std::string& t, bool naive, bool per_prefix, CountTally& ct) {
    ++ct.strings;
    auto eno = naive ? oracle::eno(t) : oracle::fast_eno(t);
    auto mus = naive ? oracle::mus(t) : oracle::fast_mus(t);
    auto [lrp, lrs] = oracle::fast_lr_lengths(t);
    if (eno.size() + 1 != mus.size()) ct.fail(ct.identity, t);
    if (mus_to_eno(mus) != eno || eno_to_mus(eno, lrp, lrs, static_cast<Pos>(t.size())) != mus)
        ct.fail(ct.roundtrip, t);
    OnlineMus om;
    for (std::size_t i = 0; i < t.size(); ++i) {
        om.append(static_cast<Symbol>(t[i]));
        if (om.size() != om.engine().eno().size() + 1) ct.fail(ct.identity, t.substr(0, i + 1));
        if (per_prefix && om.snapshot() != oracle::fast_mus(std::string_view(t).substr(0, i + 1)))
            ct.fail(ct.online_mus, t.substr(0, i + 1));
    }
    if (om.snapshot() != mus) ct.fail(ct.online_mus, t);
}

struct SizeTally {
    std::size_t strings = 0, checked = 0, mono = 0, le = 0, eno_lt = 0, mus_le = 0;
    std::string first;
    void fail(std::size_t& slot, const std::string& t) {
        ++slot;
        if (first.empty()) first = t;
    }
};

void size_check(const std::string& t, std::size_t stride, SizeTally& st) {
    ++st.strings;
    EnoEngine<CdawgIndex> eng(false);
    std::size_t prev = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        eng.append_char(static_cast<Symbol>(t[i]));
        std::size_t ep = eng.index().edge_count();
        if (ep < prev) st.fail(st.mono, t.substr(0, i + 1));
        prev = ep;
        if ((i + 1) % stride != 0 && i + 1 != t.size()) continue;
        std::string pre = t.substr(0, i + 1);
        std::size_t e = oracle::explicit_cdawg_edges(pre);
        ++st.checked;
        if (ep > e) st.fail(st.le, pre);
        if (eng.eno().size() >= e) st.fail(st.eno_lt, pre);
        if (oracle::fast_mus(pre).size() > e) st.fail(st.mus_le, pre);
    }
}

std::string summary(const Tally& tl) {
    return fmt("%zu strings, %zu steps, %zu mismatches%s%s", tl.strings, tl.steps, tl.mismatches,
               tl.first.empty() ? "" : "; first: ", tl.first.c_str());
}

template <class Engine>
double time_snapshot(const Engine& eng) {
    int reps = 0;
    auto t0 = Clock::now();
    volatile std::size_t sink = 0;
    do {
        sink = sink + eng.snapshot().size();
        ++reps;
    } while (since(t0) < 0.05);
    return since(t0) / reps;
}

}  // namespace

int main() {
    auto suite2 = random_suite();

    // 1. exhaustive binary, every prefix, both online backends
    {
        Tally tl;
        auto t0 = Clock::now();
        each_binary(kExhaustiveMaxLen, [&](const std::string& t) { online_check(t, tl); });
        double secs = since(t0);
        report(1, tl.mismatches == 0 && secs <= kExhaustiveSeconds,
               summary(tl) + fmt(", %.1f s (limit %.0f s)", secs, kExhaustiveSeconds));
    }

    // 2. randomized: online on both backends, sliding at three window sizes
    Tally online2, sliding2;
    Tally suite1_online;
    {
        auto t0 = Clock::now();
        for (const auto& t : suite2) online_check(t, online2);
        for (Pos d : kWindows)
            for (const auto& t : suite2) sliding_check(t, d, sliding2);
        report(2, online2.mismatches == 0 && sliding2.mismatches == 0,
               "online: " + summary(online2) + "; sliding: " + summary(sliding2) + fmt("; %.1f s", since(t0)));
    }

    // 3. running-example anchors
    {
        const std::string t = "abbbabbabbab";
        UkkIndex u;
        CdawgIndex g;
        for (char ch : t) {
            u.append(static_cast<Symbol>(ch));
            g.append(static_cast<Symbol>(ch));
        }
        auto lrs_str = t.substr(t.size() - static_cast<std::size_t>(u.lrs_len()));
        auto sqs_str = t.substr(t.size() - static_cast<std::size_t>(u.sqs_len()));
        bool ok = u.lrs_len() == 7 && lrs_str == "bbabbab" && u.lrs_occ_is_two() && u.lrs_nonsuffix_occ().start == 3 &&
                  sqs_str == "abbab" && u.sqs_occ_is_two() && u.sqs_nonsuffix_occ().start == 5;
        ok = ok && g.lrs_len() == 7 && g.lrs_nonsuffix_occ().start == 3 && g.sqs_len() == 5 && g.sqs_occ_is_two() &&
             g.sqs_nonsuffix_occ().start == 5;
        report(3, ok, fmt("lrSuf=%s (other occurrence at %lld), sqSuf=%s occ %d (other occurrence at %lld)",
                          lrs_str.c_str(), (long long)u.lrs_nonsuffix_occ().start, sqs_str.c_str(),
                          u.sqs_occ_is_two() ? 2 : 1, (long long)u.sqs_nonsuffix_occ().start));
    }

    // 4. counting identity and round trips
    {
        CountTally ct;
        each_binary(kExhaustiveMaxLen, [&](const std::string& t) { counting_check(t, t.size() <= 10, false, ct); });
        for (const auto& t : suite2) counting_check(t, false, t.size() <= static_cast<std::size_t>(kCdawgOracleMaxLen), ct);
        report(4, ct.identity == 0 && ct.roundtrip == 0 && ct.online_mus == 0,
               fmt("%zu strings; identity failures %zu, round-trip failures %zu, online MUS failures %zu%s%s",
                   ct.strings, ct.identity, ct.roundtrip, ct.online_mus, ct.first.empty() ? "" : "; first: ",
                   ct.first.c_str()));
    }

    // 5 and 6 reuse the suite-1 and suite-2 runs
    {
        Tally s1;
        each_binary(kExhaustiveMaxLen, [&](const std::string& t) { online_check(t, s1); });
        suite1_online = s1;
    }
    {
        std::size_t ad = suite1_online.append_delta + online2.append_delta + sliding2.append_delta;
        std::size_t dd = sliding2.delete_delta;
        report(5, ad == 0 && dd == 0,
               fmt("%zu append steps, %zu out of [-1,2]; deletes checked in sliding runs, %zu out of [-2,2]",
                   suite1_online.steps + online2.steps + sliding2.steps, ad, dd));
        std::size_t shape = suite1_online.shape + online2.shape + sliding2.shape;
        std::size_t snaps = suite1_online.snapshots + online2.snapshots + sliding2.snapshots;
        report(6, shape == 0, fmt("%zu snapshots, %zu with containment or a gap between neighbours", snaps, shape));
    }

    // 7. CDAWG sizes
    {
        SizeTally st;
        each_binary(kExhaustiveMaxLen, [&](const std::string& t) { size_check(t, t.size(), st); });
        for (const auto& t : suite2)
            size_check(t.substr(0, kCdawgOracleMaxLen), kCdawgSamplingStride, st);
        report(7, st.mono == 0 && st.le == 0 && st.eno_lt == 0 && st.mus_le == 0,
               fmt("%zu strings, %zu oracle comparisons; e' decreases %zu, e'>e %zu, #ENO>=e %zu, #MUS>e %zu%s%s",
                   st.strings, st.checked, st.mono, st.le, st.eno_lt, st.mus_le, st.first.empty() ? "" : "; first: ",
                   st.first.c_str()));
    }

    // 8 and 9: large streams
    std::vector<double> online_secs;
    {
        for (std::size_t n : kScalingSizes) {
            auto text = harness::random_text(n, 4, kSeed + n);
            online_secs.push_back(harness::bench(text, "online", 0).seconds);
        }
        auto text = harness::random_text(kBigStream, 4, kSeed + kBigStream);
        auto sl = harness::bench(text, "sliding", kBigWindow);
        double online_big = online_secs.back();
        double limit_nodes = kPeakNodesPerWindow * static_cast<double>(kBigWindow);
        report(8, static_cast<double>(sl.peak_nodes) <= limit_nodes && sl.seconds <= kSlidingSlowdown * online_big,
               fmt("d=%lld over %zu symbols: peak nodes %zu (limit %.0f), %.2f s vs online %.2f s (limit %.1fx)",
                   (long long)kBigWindow, kBigStream, sl.peak_nodes, limit_nodes, sl.seconds, online_big,
                   kSlidingSlowdown));
    }
    {
        // least-squares slope of log t against log n
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        std::size_t k = std::size(kScalingSizes);
        std::string times;
        for (std::size_t i = 0; i < k; ++i) {
            double x = std::log2(static_cast<double>(kScalingSizes[i])), y = std::log2(online_secs[i]);
            sx += x, sy += y, sxx += x * x, sxy += x * y;
            times += fmt("%s%.1fM:%.2fs", i ? " " : "", kScalingSizes[i] / 1e6, online_secs[i]);
        }
        double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        double slope_limit = std::log2(kDoublingFactor);

        // snapshot cost against #ENO: random texts of growing length, then a
        // random head with a long periodic tail, whose ENO set stays tiny
        std::vector<double> per_elem;
        std::string snaps;
        double largest_random = 0;
        for (std::size_t n : {62'500u, 125'000u, 250'000u, 500'000u, 1'000'000u}) {
            EnoEngine<UkkIndex> eng(false);
            for (char ch : harness::random_text(n, 4, kSeed ^ n)) eng.append_char(static_cast<Symbol>(ch));
            double s = time_snapshot(eng);
            per_elem.push_back(s / static_cast<double>(eng.eno().size()));
            snaps += fmt("%s#%zu:%.2fms", snaps.empty() ? "" : " ", eng.eno().size(), s * 1e3);
            largest_random = s;
        }
        EnoEngine<UkkIndex> periodic(false);
        for (char ch : harness::random_text(1000, 4, kSeed)) periodic.append_char(static_cast<Symbol>(ch));
        for (std::size_t i = 1000; i < 1'000'000; ++i) periodic.append_char(static_cast<Symbol>("abcab"[i % 5]));
        double ps = time_snapshot(periodic);
        snaps += fmt(" periodic #%zu:%.4fms", periodic.eno().size(), ps * 1e3);
        double spread = *std::max_element(per_elem.begin(), per_elem.end()) /
                        *std::min_element(per_elem.begin(), per_elem.end());
        bool ok = slope <= slope_limit && spread <= kSnapshotSpread && ps <= kPeriodicSnapshotShare * largest_random;
        report(9, ok,
               fmt("time ~ n^%.3f (limit %.3f) [%s]; snapshot cost per element spread %.2fx (limit %.1fx), ",
                   slope, slope_limit, times.c_str(), spread, kSnapshotSpread) +
                   fmt("periodic/random %.5f (limit %.2f) [%s]", ps / largest_random, kPeriodicSnapshotShare,
                       snaps.c_str()));
    }

    // 10. prefix-side lemma audit
    {
        std::mt19937_64 rng(kSeed + 10);
        std::size_t mirrored = 0, printed = 0, printed_pairs = 0;
        std::string first;
        for (int i = 0; i < kAuditPairs; ++i) {
            int sigma = 2 + static_cast<int>(rng() % 3);
            auto t = harness::random_text(1 + rng() % kAuditMaxLen, sigma, rng());
            char c = static_cast<char>('a' + rng() % static_cast<std::uint64_t>(sigma));
            auto m = oracle::prepend_diff_audit(t, c, oracle::LemmaForm::mirrored);
            auto p = oracle::prepend_diff_audit(t, c, oracle::LemmaForm::printed);
            mirrored += m.violations.size();
            printed += p.violations.size();
            printed_pairs += p.ok ? 0 : 1;
            if (!m.ok && first.empty()) first = std::string(1, c) + "+" + t + ": " + m.violations.front();
        }
        report(10, mirrored == 0,
               fmt("%d pairs, %zu violations with the lemma in mirrored form", kAuditPairs, mirrored) +
                   fmt("; letter order as printed (a/b unswapped) fails on %zu pairs (%zu violations)", printed_pairs,
                       printed) +
                   (first.empty() ? "" : "; first: " + first));
    }

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
