#include "netocc/detail/run_tracker.hpp"

#include <algorithm>

namespace netocc::detail {

void RunTracker::push(Symbol c) {
    if (any_ && c == last_) {
        ++cur_;
        return;
    }
    if (any_) longest_done_[last_] = std::max(longest_done_[last_], cur_);
    last_ = c;
    cur_ = 1;
    any_ = true;
}

TailRun RunTracker::tail_run_for(Symbol c) const {
    if (!any_ || c != last_) return {};
    return {cur_, longest_done_[c] < cur_};
}

void WindowRunTracker::push(Symbol c) {
    if (!runs_.empty() && runs_.back().sym == c) {
        ++runs_.back().len;
        return;
    }
    if (!runs_.empty()) done_[runs_.back().sym].insert(runs_.back().len);
    runs_.push_back({c, 1});
}

void WindowRunTracker::pop_front() {
    if (runs_.empty()) throw PreconditionError("pop_front on an empty window");
    Run& f = runs_.front();
    if (runs_.size() > 1) {
        auto& set = done_[f.sym];
        set.erase(set.find(f.len));
        if (f.len > 1) set.insert(f.len - 1);
    }
    if (--f.len == 0) runs_.pop_front();
}

TailRun WindowRunTracker::tail_run_for(Symbol c) const {
    if (runs_.empty() || runs_.back().sym != c) return {};
    Pos exp = runs_.back().len;
    const auto& set = done_[c];
    return {exp, set.empty() || *set.rbegin() < exp};
}

}  // namespace netocc::detail
