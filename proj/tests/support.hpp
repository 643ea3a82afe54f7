#pragma once

#include <random>
#include <string>
#include <vector>

#include "netocc/types.hpp"

namespace testing_support {

using netocc::Interval;

inline std::vector<Interval> ivs(std::initializer_list<std::pair<long, long>> xs) {
    std::vector<Interval> out;
    for (auto [a, b] : xs) out.push_back({a, b});
    return out;
}

// All strings over {a, b, ...} of exactly length n.
template <class F>
void each_string(int n, int sigma, F&& f) {
    std::string s(static_cast<std::size_t>(n), 'a');
    while (true) {
        f(s);
        int i = n - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == 'a' + sigma - 1) s[static_cast<std::size_t>(i--)] = 'a';
        if (i < 0) return;
        ++s[static_cast<std::size_t>(i)];
    }
}

inline std::string random_string(std::mt19937_64& rng, std::size_t n, int sigma) {
    std::uniform_int_distribution<int> d(0, sigma - 1);
    std::string s(n, 'a');
    for (auto& ch : s) ch = static_cast<char>('a' + d(rng));
    return s;
}

}  // namespace testing_support
