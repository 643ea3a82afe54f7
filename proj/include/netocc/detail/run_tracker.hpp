#pragma once

#include <array>
#include <deque>
#include <set>

#include "netocc/index_types.hpp"

namespace netocc::detail {

// Tail runs for an append-only text: the current run plus the longest
// finished run per symbol.
class RunTracker {
public:
    void push(Symbol c);
    TailRun tail_run_for(Symbol c) const;
    TailRun tail_run() const { return any_ ? tail_run_for(last_) : TailRun{}; }

private:
    std::array<Pos, 256> longest_done_{};
    Pos cur_ = 0;
    Symbol last_ = 0;
    bool any_ = false;
};

// Same queries over a window: runs can also shrink from the left.
class WindowRunTracker {
public:
    void push(Symbol c);
    void pop_front();
    TailRun tail_run_for(Symbol c) const;
    TailRun tail_run() const { return runs_.empty() ? TailRun{} : tail_run_for(runs_.back().sym); }

private:
    struct Run {
        Symbol sym;
        Pos len;
    };
    std::deque<Run> runs_;
    std::array<std::multiset<Pos>, 256> done_;
};

}  // namespace netocc::detail
