#pragma once

#include <string>

#include "netocc/detail/run_tracker.hpp"
#include "netocc/detail/suffix_tree.hpp"

namespace netocc {

// Implicit suffix tree of a window of at most d symbols.
class SlidingIndex {
public:
    explicit SlidingIndex(Pos d) : tree_(check(d)) {}

    void append(Symbol c) {
        tree_.append(c);
        runs_.push(c);
    }
    void delete_leftmost() {
        tree_.delete_leftmost();
        runs_.pop_front();
    }

    Pos window() const { return tree_.window(); }
    Pos first() const { return tree_.first(); }
    Pos last() const { return tree_.last(); }
    Pos size() const { return tree_.size(); }
    bool full() const { return tree_.size() >= tree_.window(); }
    Symbol sym(Pos p) const { return tree_.sym(p); }

    Pos lrs_len() const { return tree_.lrs_len(); }
    bool lrs_occ_is_two() const { return tree_.lrs_occ_is_two(); }
    Interval lrs_nonsuffix_occ() const { return tree_.lrs_nonsuffix_occ(); }
    Pos sqs_len() const { return tree_.sqs_len(); }
    bool sqs_occ_is_two() const { return tree_.sqs_occ_is_two(); }
    Interval sqs_nonsuffix_occ() const { return tree_.sqs_nonsuffix_occ(); }
    TailRun tail_run() const { return runs_.tail_run(); }
    TailRun tail_run_for(Symbol c) const { return runs_.tail_run_for(c); }

    PrefixState prefix_state(bool with_head_run = true) const { return tree_.prefix_state(with_head_run); }
    std::size_t occ_count_capped(const Interval& iv, std::size_t cap) const {
        return tree_.occ_count_capped(iv, cap);
    }

    std::size_t node_count() const { return tree_.node_count(); }
    std::size_t edge_count() const { return tree_.edge_count(); }
    std::size_t peak_node_count() const { return tree_.peak_node_count(); }
    void audit() const { tree_.audit(); }
    std::string canonical() const { return tree_.canonical(); }
    std::string dot() const { return tree_.dot("sliding"); }

private:
    static Pos check(Pos d) {
        if (d < 1) throw PreconditionError("window size must be at least 1");
        return d;
    }
    detail::SuffixTree tree_;
    detail::WindowRunTracker runs_;
};

}  // namespace netocc
