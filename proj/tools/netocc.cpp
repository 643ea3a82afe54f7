// netocc: stream extended net occurrences (or MUSs) of a byte stream.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "netocc/cdawg_index.hpp"
#include "netocc/eno_engine.hpp"
#include "netocc/harness.hpp"
#include "netocc/mus_bridge.hpp"
#include "netocc/sliding_index.hpp"
#include "netocc/ukk_index.hpp"

using namespace netocc;

namespace {

struct RunConfig {
    std::string emit = "per-step";
    std::string format = "tsv";
    std::string input = "-";
    Pos window = 0;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ios::sync_with_stdio(false);
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// `+x` for an append of x; bytes outside printable ASCII, tab and backslash
// are written as \xHH so rows stay tab-separated.
std::string op_text(const DiffEvent& ev) {
    if (ev.cause == Cause::delete_left) return "-";
    unsigned char c = ev.symbol;
    if (c < 0x21 || c > 0x7e || c == '\\') {
        char buf[8];
        std::snprintf(buf, sizeof buf, "+\\x%02X", c);
        return buf;
    }
    return std::string("+") + static_cast<char>(c);
}

class Emitter {
public:
    Emitter(const RunConfig& cfg, std::ostream& os) : cfg_(cfg), os_(os) {}

    void events(const std::vector<DiffEvent>& evs) {
        if (cfg_.emit != "per-step") return;
        for (const auto& ev : evs) {
            const char* kind = ev.kind == EventKind::add ? "add" : "del";
            if (cfg_.format == "json") {
                nlohmann::ordered_json j{{"step", ev.step}, {"op", op_text(ev)}, {"event", kind},
                                 {"start", ev.interval.start}, {"end", ev.interval.end}};
                os_ << j.dump() << '\n';
            } else {
                os_ << ev.step << '\t' << op_text(ev) << '\t' << kind << '\t' << ev.interval.start << '\t'
                    << ev.interval.end << '\n';
            }
        }
    }

    void snapshot(const std::vector<Interval>& ivs) {
        if (cfg_.emit != "final") return;
        for (const auto& iv : ivs) {
            if (cfg_.format == "json")
                os_ << nlohmann::ordered_json{{"start", iv.start}, {"end", iv.end}}.dump() << '\n';
            else
                os_ << iv.start << '\t' << iv.end << '\n';
        }
    }

private:
    const RunConfig& cfg_;
    std::ostream& os_;
};

template <class Engine, class Step>
void drive(Engine& eng, const std::string& text, Emitter& out, Step step) {
    for (char ch : text) out.events(step(eng, static_cast<Symbol>(ch)));
    out.snapshot(eng.snapshot());
}

int run_mode(const std::string& mode, const RunConfig& cfg) {
    std::string text = read_input(cfg.input);
    Emitter out(cfg, std::cout);
    auto append = [](auto& e, Symbol c) { return e.append_char(c); };
    if (mode == "online") {
        EnoEngine<UkkIndex> eng(false);
        drive(eng, text, out, append);
    } else if (mode == "cdawg") {
        EnoEngine<CdawgIndex> eng(false);
        drive(eng, text, out, append);
    } else if (mode == "sliding") {
        EnoEngine<SlidingIndex> eng(false, cfg.window);
        drive(eng, text, out, [](auto& e, Symbol c) { return e.slide(c); });
    } else {
        OnlineMus om;
        drive(om, text, out, [](auto& e, Symbol c) { return e.append(c); });
    }
    std::cout.flush();
    return std::cout ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extended net occurrences of a byte stream, online or over a sliding window"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_run_flags = [&](CLI::App* sub) {
        sub->add_option("--emit", cfg.emit, "per-step diffs or the final snapshot")
            ->check(CLI::IsMember({"per-step", "final"}));
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
        sub->add_option("input", cfg.input, "input file, or - for standard input");
    };
    auto* online = app.add_subcommand("online", "append-only, suffix-tree backend");
    auto* cdawg = app.add_subcommand("cdawg", "append-only, CDAWG backend");
    auto* sliding = app.add_subcommand("sliding", "sliding window of d symbols");
    auto* mus = app.add_subcommand("mus", "minimal unique substrings, CDAWG backend");
    for (auto* sub : {online, cdawg, sliding, mus}) add_run_flags(sub);
    sliding->add_option("-d,--window", cfg.window, "window size")->required()->check(CLI::PositiveNumber);

    harness::VerifyConfig vc;
    auto* verify = app.add_subcommand("verify", "differential check against the brute-force oracle");
    verify->add_option("--mode", vc.mode)->check(CLI::IsMember({"online", "cdawg", "sliding", "mus"}));
    verify->add_option("--max-len", vc.max_len)->check(CLI::PositiveNumber);
    verify->add_option("--alphabet", vc.alphabet)->check(CLI::Range(1, 256));
    verify->add_option("--cases", vc.cases)->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", vc.seed);
    verify->add_option("--window", vc.window)->check(CLI::PositiveNumber);
    verify->add_option("--threads", vc.threads);

    std::string bench_mode = "online", bench_input;
    std::size_t bench_len = 1'000'000;
    int bench_sigma = 4;
    std::uint64_t bench_seed = 1;
    Pos bench_window = 1024;
    auto* bench = app.add_subcommand("bench", "throughput and peak index size");
    bench->add_option("--mode", bench_mode)->check(CLI::IsMember({"online", "cdawg", "sliding", "mus"}));
    bench->add_option("--length", bench_len, "random text length when no input is given");
    bench->add_option("--alphabet", bench_sigma)->check(CLI::Range(1, 256));
    bench->add_option("--seed", bench_seed);
    bench->add_option("--window", bench_window)->check(CLI::PositiveNumber);
    bench->add_option("input", bench_input, "input file, or - for standard input");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            auto rep = harness::verify(vc);
            std::cout << "mode\t" << vc.mode << "\ncases\t" << rep.cases << "\nsteps\t" << rep.steps
                      << "\nmismatches\t" << rep.mismatches << '\n';
            if (rep.mismatches) {
                std::cerr << rep.first_mismatch << '\n';
                return 1;
            }
            return 0;
        }
        if (bench->parsed()) {
            std::string text = bench_input.empty() ? harness::random_text(bench_len, bench_sigma, bench_seed)
                                                   : read_input(bench_input);
            auto r = harness::bench(text, bench_mode, bench_window);
            nlohmann::ordered_json j{{"mode", r.mode},
                             {"symbols", r.symbols},
                             {"seconds", r.seconds},
                             {"symbols_per_second", r.seconds > 0 ? r.symbols / r.seconds : 0.0},
                             {"peak_nodes", r.peak_nodes},
                             {"peak_edges", r.peak_edges},
                             {"final_eno", r.final_eno}};
            if (bench_mode == "sliding") j["window"] = bench_window;
            std::cout << j.dump() << '\n';
            return 0;
        }
        for (auto* sub : {online, cdawg, sliding, mus})
            if (sub->parsed()) return run_mode(sub->get_name(), cfg);
    } catch (const PreconditionError& e) {
        std::cerr << "netocc: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "netocc: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
