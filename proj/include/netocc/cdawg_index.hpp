#pragma once

// Online implicit CDAWG (left-to-right), with the same query surface as the
// suffix-tree indexes plus |lrPref| and the edge count.

#include <cstdint>
#include <string>
#include <vector>

#include "netocc/detail/run_tracker.hpp"
#include "netocc/index_types.hpp"
#include "netocc/types.hpp"

namespace netocc {

class CdawgIndex {
public:
    using NodeId = std::uint32_t;
    static constexpr NodeId kSource = 0;
    static constexpr NodeId kSink = 1;

    struct EdgeInfo {
        NodeId from;
        NodeId to;
        Interval label;
        bool primary;
    };

    CdawgIndex();

    void append(Symbol c);

    Pos first() const { return 1; }
    Pos last() const { return r_; }
    Pos size() const { return r_; }
    Symbol sym(Pos p) const { return text_[static_cast<std::size_t>(p - 1)]; }

    Pos lrs_len() const { return node_len(act_node_) + (r_ - act_k_ + 1); }
    bool lrs_occ_is_two() const;
    Interval lrs_nonsuffix_occ() const;
    Pos sqs_len() const { return sq_len_; }
    bool sqs_occ_is_two() const;
    Interval sqs_nonsuffix_occ() const;
    TailRun tail_run() const { return runs_.tail_run(); }
    TailRun tail_run_for(Symbol c) const { return runs_.tail_run_for(c); }
    Pos lrpref_len() const;

    // e'(T): edges once isomorphic subgraphs are merged. The construction keeps
    // some equivalent nodes apart (see structural_edge_count), so this minimizes
    // a copy bottom-up; O(edges) and cached until the next append.
    std::size_t edge_count() const;
    std::size_t structural_edge_count() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }
    // min(#paths to the sink, 3)
    int sat_paths(NodeId v) const { return v == kSink ? 1 : nodes_[v].sat; }
    Pos node_len(NodeId v) const;
    std::vector<EdgeInfo> edges() const;

    void audit() const;
    std::string dot() const;

private:
    static constexpr NodeId kBottom = 0xfffffffeu;
    static constexpr Pos kOpen = -1;

    struct Edge {
        Pos k;
        Pos p;  // kOpen: runs to the current end
        NodeId to;
        Symbol head;
    };
    struct Node {
        Pos len = 0;
        NodeId suf = kBottom;
        int sat = 0;
        std::vector<Edge> out;   // sorted by head
        std::vector<NodeId> in;  // one entry per in-edge; not kept for the sink
    };

    Pos edge_end(const Edge& e) const { return e.p == kOpen ? r_ : e.p; }
    Edge* edge(NodeId s, Symbol c);
    const Edge* edge(NodeId s, Symbol c) const;
    void add_edge(NodeId s, Edge e);
    void retarget(NodeId s, Edge& e, NodeId to);
    void refresh_sat(NodeId v);

    void canonize(NodeId& s, Pos& k, Pos p) const;
    bool check_end_point(NodeId s, Pos k, Pos p, Symbol c) const;
    NodeId split_edge(NodeId s, Pos k, Pos p);
    void separate_node(NodeId& s, Pos& k, Pos p);

    bool suffix_occ_ge3(NodeId s, Pos k, Pos len) const;
    void drop_first(NodeId& s, Pos& k, Pos& len) const;
    void settle_secondary();

    std::vector<Symbol> text_;
    std::vector<Node> nodes_;
    std::size_t edges_ = 0;
    Pos r_ = 0;
    NodeId act_node_ = kSource;
    Pos act_k_ = 1;
    NodeId sq_node_ = kSource;
    Pos sq_k_ = 1;
    Pos sq_len_ = 0;
    NodeId primary_src_ = kSource;  // tail of the sink's primary in-edge
    detail::RunTracker runs_;
    std::vector<std::uint64_t> prefix_hash_{0};
    mutable Pos merged_at_ = -1;
    mutable std::size_t merged_edges_ = 0;

    std::uint64_t label_hash(Pos k, Pos end) const;
};

}  // namespace netocc
