#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace netocc {

using Symbol = std::uint8_t;
using Pos = std::int64_t;  // absolute, 1-based

// Closed range [start..end]; end == start-1 is the empty string sitting
// just before `start`.
struct Interval {
    Pos start = 1;
    Pos end = 0;

    Pos length() const { return end - start + 1; }
    bool empty() const { return end < start; }
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& iv);

// An engine or index reached a state that contradicts its own invariants.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

// Caller asked for something the current state can't answer.
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace netocc
