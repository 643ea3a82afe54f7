#include "netocc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "netocc/cdawg_index.hpp"
#include "netocc/eno_engine.hpp"
#include "netocc/mus_bridge.hpp"
#include "netocc/oracle.hpp"
#include "netocc/sliding_index.hpp"
#include "netocc/ukk_index.hpp"

namespace netocc::harness {

namespace {

std::string show(const std::vector<Interval>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << to_string(v[i]);
    os << ']';
    return os.str();
}

std::string mismatch(std::string_view what, std::string_view text, std::size_t step,
                     const std::vector<Interval>& got, const std::vector<Interval>& want) {
    std::ostringstream os;
    os << what << " mismatch on \"" << text << "\" at step " << step << ": got " << show(got) << ", want "
       << show(want);
    return os.str();
}

template <class Backend>
std::optional<std::string> verify_online(std::string_view text) {
    EnoEngine<Backend> eng(false);
    oracle::PrefixEno ref;
    for (std::size_t i = 0; i < text.size(); ++i) {
        eng.append_char(static_cast<Symbol>(text[i]));
        ref.push(text[i]);
        auto want = ref.eno();
        if (eng.snapshot() != want) return mismatch("eno", text, i + 1, eng.snapshot(), want);
    }
    return std::nullopt;
}

std::optional<std::string> verify_sliding(std::string_view text, Pos d) {
    EnoEngine<SlidingIndex> eng(false, d);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (eng.index().full()) {
            eng.delete_leftmost_char();
            Pos lo = eng.index().first();
            auto want = oracle::window_eno(text.substr(static_cast<std::size_t>(lo - 1), i + 1 - static_cast<std::size_t>(lo)), lo);
            if (eng.snapshot() != want) return mismatch("window eno (after delete)", text, i + 1, eng.snapshot(), want);
        }
        eng.append_char(static_cast<Symbol>(text[i]));
        Pos lo = eng.index().first();
        auto want = oracle::window_eno(text.substr(static_cast<std::size_t>(lo - 1), i + 2 - static_cast<std::size_t>(lo)), lo);
        if (eng.snapshot() != want) return mismatch("window eno", text, i + 1, eng.snapshot(), want);
    }
    return std::nullopt;
}

std::optional<std::string> verify_mus(std::string_view text) {
    OnlineMus om;
    for (std::size_t i = 0; i < text.size(); ++i) {
        om.append(static_cast<Symbol>(text[i]));
        auto want = oracle::fast_mus(text.substr(0, i + 1));
        if (om.snapshot() != want) return mismatch("mus", text, i + 1, om.snapshot(), want);
    }
    return std::nullopt;
}

}  // namespace

bool known_mode(std::string_view mode) {
    return mode == "online" || mode == "cdawg" || mode == "sliding" || mode == "mus";
}

std::optional<std::string> verify_case(std::string_view text, std::string_view mode, Pos window) {
    if (mode == "online") return verify_online<UkkIndex>(text);
    if (mode == "cdawg") return verify_online<CdawgIndex>(text);
    if (mode == "sliding") return verify_sliding(text, window);
    if (mode == "mus") return verify_mus(text);
    throw PreconditionError("unknown mode " + std::string(mode));
}

std::string random_text(std::size_t n, int sigma, std::uint64_t seed) {
    if (sigma < 1 || sigma > 256) throw PreconditionError("alphabet size must be in [1, 256]");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(0, sigma - 1);
    std::string s(n, '\0');
    // letters for small alphabets keep failure reports readable
    for (auto& ch : s) ch = static_cast<char>(sigma <= 26 ? 'a' + d(rng) : d(rng));
    return s;
}

VerifyReport verify(const VerifyConfig& cfg) {
    if (!known_mode(cfg.mode)) throw PreconditionError("unknown mode " + cfg.mode);
    if (cfg.max_len < 1) throw PreconditionError("max length must be positive");
    if (cfg.mode == "sliding" && cfg.window < 1) throw PreconditionError("window size must be at least 1");
    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    VerifyReport rep;
    std::atomic<int> next{0};
    std::atomic<std::size_t> steps{0}, bad{0};
    std::mutex mu;
    auto worker = [&] {
        for (int c; (c = next++) < cfg.cases;) {
            std::uint64_t s = cfg.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(c);
            std::size_t len = 1 + static_cast<std::size_t>(std::mt19937_64(s)() % static_cast<std::uint64_t>(cfg.max_len));
            std::string text = random_text(len, cfg.alphabet, s + 1);
            auto res = verify_case(text, cfg.mode, cfg.window);
            steps += len;
            if (res) {
                ++bad;
                std::lock_guard lk(mu);
                if (rep.first_mismatch.empty()) rep.first_mismatch = *res;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    rep.cases = static_cast<std::size_t>(std::max(cfg.cases, 0));
    rep.steps = steps;
    rep.mismatches = bad;
    return rep;
}

BenchResult bench(std::string_view text, std::string_view mode, Pos window) {
    BenchResult res;
    res.mode = std::string(mode);
    res.symbols = text.size();
    auto t0 = std::chrono::steady_clock::now();
    if (mode == "online") {
        EnoEngine<UkkIndex> eng(false);
        for (char ch : text) eng.append_char(static_cast<Symbol>(ch));
        res.peak_nodes = eng.index().node_count();
        res.peak_edges = eng.index().edge_count();
        res.final_eno = eng.eno().size();
    } else if (mode == "cdawg") {
        EnoEngine<CdawgIndex> eng(false);
        for (char ch : text) eng.append_char(static_cast<Symbol>(ch));
        res.peak_nodes = eng.index().node_count();
        res.peak_edges = eng.index().structural_edge_count();
        res.final_eno = eng.eno().size();
    } else if (mode == "sliding") {
        EnoEngine<SlidingIndex> eng(false, window);
        for (char ch : text) eng.slide(static_cast<Symbol>(ch));
        res.peak_nodes = eng.index().peak_node_count();
        res.peak_edges = res.peak_nodes ? res.peak_nodes - 1 : 0;
        res.final_eno = eng.eno().size();
    } else if (mode == "mus") {
        OnlineMus om;
        for (char ch : text) om.append(static_cast<Symbol>(ch));
        res.peak_nodes = om.engine().index().node_count();
        res.peak_edges = om.engine().index().structural_edge_count();
        res.final_eno = om.engine().eno().size();
    } else {
        throw PreconditionError("unknown mode " + std::string(mode));
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace netocc::harness
