#pragma once

// Implicit suffix tree shared by the online and sliding indexes. Positions are
// absolute; the text lives in a growing vector (online) or a ring (sliding).

#include <cstdint>
#include <string>
#include <vector>

#include "netocc/detail/huge_alloc.hpp"
#include "netocc/index_types.hpp"
#include "netocc/types.hpp"

namespace netocc::detail {

using NodeId = std::uint32_t;
inline constexpr NodeId kNil = 0xffffffffu;
inline constexpr NodeId kRoot = 0;

struct StNode {
    Pos pos = 0;  // start of an occurrence of the node's string; leaves: suffix start
    std::int32_t depth = 0;
    NodeId parent = kNil;
    NodeId link = kNil;
    NodeId first = kNil;  // children as a sibling list
    NodeId next = kNil;
    Symbol head = 0;  // first symbol of the in-edge
    bool leaf = false;
    bool credit = false;
};

class SuffixTree {
public:
    // window == 0: unbounded online text. Otherwise the tree holds at most
    // `window` symbols and supports delete_leftmost().
    explicit SuffixTree(Pos window = 0);

    void append(Symbol c);
    void delete_leftmost();

    Pos first() const { return l_; }
    Pos last() const { return r_; }
    Pos size() const { return r_ - l_ + 1; }
    bool sliding() const { return window_ > 0; }
    Pos window() const { return window_; }
    Symbol sym(Pos p) const {
        return sliding() ? ring_[static_cast<std::size_t>(p % cap_)] : text_[static_cast<std::size_t>(p - 1)];
    }

    Pos lrs_len() const { return str_len(act_node_, act_k_); }
    bool lrs_occ_is_two() const;
    Interval lrs_nonsuffix_occ() const;
    Pos sqs_len() const { return str_len(sq_node_, sq_k_); }
    bool sqs_occ_is_two() const;
    Interval sqs_nonsuffix_occ() const;

    // min(#occ(W[iv]), cap); empty iv counts |W|+1.
    std::size_t occ_count_capped(const Interval& iv, std::size_t cap) const;
    PrefixState prefix_state(bool with_head_run = true) const;

    std::size_t node_count() const { return live_nodes_; }
    std::size_t edge_count() const { return live_nodes_ - 1; }
    std::size_t peak_node_count() const { return peak_nodes_; }

    // Throws InvariantError on any structural inconsistency. O(size).
    void audit() const;
    // Window-relative, position-free serialization; equal iff isomorphic.
    std::string canonical() const;
    std::string dot(const std::string& name) const;

private:
    struct Hit {
        bool found = false;
        NodeId above = kRoot;  // deepest node whose string is a prefix of the pattern
        NodeId head = kRoot;   // node at or just below the locus
        Pos off = 0;           // symbols into head's edge; 0 means at `above`
    };

    NodeId alloc();
    void release(NodeId v);
    NodeId find(NodeId s, Symbol c) const;
    void add_child(NodeId parent, NodeId child);
    void remove_child(NodeId parent, NodeId child);
    void replace_child(NodeId parent, NodeId old_child, NodeId new_child);
    Pos label_start(NodeId v) const { return nodes_[v].pos + nodes_[nodes_[v].parent].depth; }
    Pos edge_len(NodeId v) const {
        const auto& n = nodes_[v];
        if (n.leaf) return r_ - label_start(v) + 1;
        return n.depth - nodes_[n.parent].depth;
    }
    Pos str_len(NodeId s, Pos k) const { return nodes_[s].depth + (r_ - k + 1); }
    void canonize(NodeId& s, Pos& k, Pos end) const;
    void credit_update(NodeId v, Pos i);
    NodeId& leaf_slot(Pos p) { return leaf_at_[static_cast<std::size_t>(p % cap_)]; }
    NodeId leaf_slot(Pos p) const { return leaf_at_[static_cast<std::size_t>(p % cap_)]; }

    // Secondary point upkeep.
    bool suffix_occ_ge3(NodeId s, Pos k) const;
    void drop_first(NodeId& s, Pos& k) const;
    void settle_secondary();

    Hit locate(Pos start, Pos end) const;
    std::size_t leaves_capped(NodeId v, std::size_t cap) const;
    std::size_t zone_occurrences(Pos start, Pos end, std::size_t cap) const;

    void canonical_rec(NodeId v, std::string& out) const;

    Pos window_ = 0;
    Pos cap_ = 1;
    std::vector<Symbol, HugeAlloc<Symbol>> text_;
    std::vector<Symbol> ring_;
    std::vector<NodeId, HugeAlloc<NodeId>> leaf_at_;
    std::vector<StNode, HugeAlloc<StNode>> nodes_;
    std::vector<NodeId> free_;
    std::size_t live_nodes_ = 1;
    std::size_t peak_nodes_ = 1;
    Pos l_ = 1;
    Pos r_ = 0;
    // Active point: string(act_node_) + T[act_k_..r], the locus of lrSuf.
    NodeId act_node_ = kRoot;
    Pos act_k_ = 1;
    // Secondary point: locus of sqSuf, same encoding.
    NodeId sq_node_ = kRoot;
    Pos sq_k_ = 1;
};

}  // namespace netocc::detail
