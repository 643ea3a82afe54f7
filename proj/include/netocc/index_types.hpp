#pragma once

#include <cstddef>

#include "netocc/types.hpp"

namespace netocc {

// Run of a symbol c at the end of the text, as seen just before appending c.
struct TailRun {
    Pos exp = 0;
    bool unique = false;  // #occ(c^exp) == 1; never true for exp == 0
};

struct PrefixState {
    Pos lrp_len = 0;
    bool lrp_two = false;
    Interval lrp_other{};  // valid when lrp_two
    Pos sqp_len = 0;
    std::size_t sqp_occ = 1;
    Interval sqp_other{};  // valid when sqp_occ == 2
    Pos head_exp = 0;      // max e with W[l]^e a prefix of W[l+1..r]
    bool head_unique = false;
};

}  // namespace netocc
