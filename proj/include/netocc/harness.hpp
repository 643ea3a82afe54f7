#pragma once

// Differential verification and timing runs shared by the CLI, the acceptance
// binary and the Python module.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "netocc/types.hpp"

namespace netocc::harness {

// Backends by name: online (suffix tree), cdawg, sliding, mus.
bool known_mode(std::string_view mode);

struct VerifyConfig {
    std::string mode = "online";
    int max_len = 12;
    int alphabet = 2;
    int cases = 500;
    std::uint64_t seed = 7;
    Pos window = 8;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct VerifyReport {
    std::size_t cases = 0;
    std::size_t steps = 0;
    std::size_t mismatches = 0;
    std::string first_mismatch;
};

// Compare the engine with the oracle after every step of one text.
// Returns a description of the first disagreement.
std::optional<std::string> verify_case(std::string_view text, std::string_view mode, Pos window);

VerifyReport verify(const VerifyConfig& cfg);

std::string random_text(std::size_t n, int sigma, std::uint64_t seed);

struct BenchResult {
    std::string mode;
    std::size_t symbols = 0;
    double seconds = 0;
    std::size_t peak_nodes = 0;
    std::size_t peak_edges = 0;
    std::size_t final_eno = 0;
};

BenchResult bench(std::string_view text, std::string_view mode, Pos window);

}  // namespace netocc::harness
