#pragma once

#include <string>

#include "netocc/detail/run_tracker.hpp"
#include "netocc/detail/suffix_tree.hpp"

namespace netocc {

// Online implicit suffix tree with the active and secondary points.
class UkkIndex {
public:
    void append(Symbol c) {
        runs_.push(c);
        tree_.append(c);
    }

    Pos first() const { return 1; }
    Pos last() const { return tree_.last(); }
    Pos size() const { return tree_.size(); }
    Symbol sym(Pos p) const { return tree_.sym(p); }

    Pos lrs_len() const { return tree_.lrs_len(); }
    bool lrs_occ_is_two() const { return tree_.lrs_occ_is_two(); }
    Interval lrs_nonsuffix_occ() const { return tree_.lrs_nonsuffix_occ(); }
    Pos sqs_len() const { return tree_.sqs_len(); }
    bool sqs_occ_is_two() const { return tree_.sqs_occ_is_two(); }
    Interval sqs_nonsuffix_occ() const { return tree_.sqs_nonsuffix_occ(); }
    TailRun tail_run() const { return runs_.tail_run(); }
    TailRun tail_run_for(Symbol c) const { return runs_.tail_run_for(c); }

    // Prefix-side queries also work here (the leaf of position 1 never moves).
    PrefixState prefix_state() const { return tree_.prefix_state(); }
    std::size_t occ_count_capped(const Interval& iv, std::size_t cap) const {
        return tree_.occ_count_capped(iv, cap);
    }

    std::size_t node_count() const { return tree_.node_count(); }
    std::size_t edge_count() const { return tree_.edge_count(); }
    void audit() const { tree_.audit(); }
    std::string canonical() const { return tree_.canonical(); }
    std::string dot() const { return tree_.dot("ukk"); }

private:
    detail::SuffixTree tree_;
    detail::RunTracker runs_;
};

}  // namespace netocc
