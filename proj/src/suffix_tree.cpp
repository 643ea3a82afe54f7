#include "netocc/detail/suffix_tree.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace netocc::detail {

SuffixTree::SuffixTree(Pos window) : window_(window) {
    if (window < 0) throw PreconditionError("negative window size");
    nodes_.emplace_back();
    if (sliding()) {
        cap_ = 2 * window;
        ring_.assign(static_cast<std::size_t>(cap_), 0);
        leaf_at_.assign(static_cast<std::size_t>(cap_), kNil);
        nodes_.reserve(static_cast<std::size_t>(2 * window + 2));
    }
}

NodeId SuffixTree::alloc() {
    NodeId v;
    if (!free_.empty()) {
        v = free_.back();
        free_.pop_back();
        nodes_[v] = StNode{};
    } else {
        if (nodes_.size() >= kNil) throw CapacityError("suffix tree node arena exhausted");
        v = static_cast<NodeId>(nodes_.size());
        nodes_.emplace_back();
    }
    ++live_nodes_;
    peak_nodes_ = std::max(peak_nodes_, live_nodes_);
    return v;
}

void SuffixTree::release(NodeId v) {
    free_.push_back(v);
    --live_nodes_;
}

NodeId SuffixTree::find(NodeId s, Symbol c) const {
    for (NodeId v = nodes_[s].first; v != kNil; v = nodes_[v].next)
        if (nodes_[v].head == c) return v;
    return kNil;
}

void SuffixTree::add_child(NodeId parent, NodeId child) {
    nodes_[child].parent = parent;
    nodes_[child].next = nodes_[parent].first;
    nodes_[parent].first = child;
}

void SuffixTree::remove_child(NodeId parent, NodeId child) {
    NodeId* link = &nodes_[parent].first;
    while (*link != child) link = &nodes_[*link].next;
    *link = nodes_[child].next;
    nodes_[child].next = kNil;
}

void SuffixTree::replace_child(NodeId parent, NodeId old_child, NodeId new_child) {
    NodeId* link = &nodes_[parent].first;
    while (*link != old_child) link = &nodes_[*link].next;
    *link = new_child;
    nodes_[new_child].next = nodes_[old_child].next;
    nodes_[new_child].parent = parent;
    nodes_[new_child].head = nodes_[old_child].head;
    nodes_[old_child].next = kNil;
}

void SuffixTree::canonize(NodeId& s, Pos& k, Pos end) const {
    while (k <= end) {
        NodeId ch = find(s, sym(k));
        if (ch == kNil) throw InvariantError("canonize walked off the tree");
        if (nodes_[ch].leaf) return;
        Pos len = edge_len(ch);
        if (len > end - k + 1) return;
        k += len;
        s = ch;
    }
}

void SuffixTree::credit_update(NodeId v, Pos i) {
    if (!sliding()) return;
    while (v != kRoot) {
        auto& n = nodes_[v];
        if (i > n.pos)
            n.pos = i;
        else
            i = n.pos;
        if (!n.credit) {
            n.credit = true;
            return;
        }
        n.credit = false;
        v = n.parent;
    }
}

void SuffixTree::append(Symbol c) {
    const Pos i = r_ + 1;
    if (sliding()) {
        if (size() >= window_) throw CapacityError("window is full");
        ring_[static_cast<std::size_t>(i % cap_)] = c;
    } else {
        if (i >= std::numeric_limits<std::int32_t>::max()) throw CapacityError("text too long");
        text_.push_back(c);
    }
    r_ = i;

    NodeId s = act_node_;
    Pos k = act_k_;
    NodeId oldr = kNil;
    bool at_end = false;
    while (true) {
        NodeId rnode;
        bool split = false;
        if (k <= i - 1) {
            NodeId child = find(s, sym(k));
            Pos off = i - k;
            Pos ls = label_start(child);
            if (sym(ls + off) == c) break;
            NodeId u = alloc();
            nodes_[u].pos = k - nodes_[s].depth;
            nodes_[u].depth = static_cast<std::int32_t>(nodes_[s].depth + off);
            nodes_[u].credit = true;
            replace_child(s, child, u);
            nodes_[child].head = sym(ls + off);
            add_child(u, child);
            rnode = u;
            split = true;
        } else {
            if (find(s, c) != kNil) break;
            rnode = s;
        }
        NodeId leaf = alloc();
        nodes_[leaf].leaf = true;
        nodes_[leaf].pos = i - nodes_[rnode].depth;
        nodes_[leaf].head = c;
        add_child(rnode, leaf);
        if (sliding()) {
            leaf_slot(nodes_[leaf].pos) = leaf;
            if (!split) credit_update(rnode, nodes_[leaf].pos);
        }
        if (oldr != kNil) nodes_[oldr].link = rnode;
        oldr = rnode == kRoot ? kNil : rnode;
        if (s == kRoot) {
            if (k > i - 1) {
                at_end = true;
                break;
            }
            ++k;
        } else {
            s = nodes_[s].link;
        }
        canonize(s, k, i - 1);
    }
    if (at_end) {
        act_node_ = kRoot;
        act_k_ = i + 1;
    } else {
        if (oldr != kNil) nodes_[oldr].link = s;
        canonize(s, k, i);
        act_node_ = s;
        act_k_ = k;
    }
    canonize(sq_node_, sq_k_, r_);
    settle_secondary();
}

void SuffixTree::delete_leftmost() {
    if (!sliding()) throw PreconditionError("delete_leftmost on an append-only tree");
    if (size() <= 0) throw PreconditionError("delete_leftmost on an empty window");
    NodeId leaf = leaf_slot(l_);
    NodeId p = nodes_[leaf].parent;
    bool active_on_leaf = act_k_ <= r_ && act_node_ == p && find(p, sym(act_k_)) == leaf;
    leaf_slot(l_) = kNil;
    if (active_on_leaf) {
        // lrSuf loses its only other occurrence; the leaf now carries lrSuf.
        Pos np = act_k_ - nodes_[p].depth;
        nodes_[leaf].pos = np;
        leaf_slot(np) = leaf;
        credit_update(p, np);
        if (p == kRoot)
            ++act_k_;
        else
            act_node_ = nodes_[p].link;
        canonize(act_node_, act_k_, r_);
    } else {
        remove_child(p, leaf);
        release(leaf);
        if (p != kRoot && nodes_[nodes_[p].first].next == kNil) {
            NodeId ch = nodes_[p].first;
            NodeId g = nodes_[p].parent;
            Pos d = nodes_[p].depth - nodes_[g].depth;
            if (act_node_ == p) {
                act_node_ = g;
                act_k_ -= d;
            }
            if (sq_node_ == p) {
                sq_node_ = g;
                sq_k_ -= d;
            }
            if (nodes_[p].credit) credit_update(g, nodes_[p].pos);
            nodes_[p].first = kNil;
            replace_child(g, p, ch);
            release(p);
        }
    }
    ++l_;
    if (sqs_len() > size()) drop_first(sq_node_, sq_k_);
    settle_secondary();
}

void SuffixTree::drop_first(NodeId& s, Pos& k) const {
    if (s == kRoot)
        ++k;
    else
        s = nodes_[s].link;
    canonize(s, k, r_);
}

bool SuffixTree::suffix_occ_ge3(NodeId s, Pos k) const {
    Pos len = str_len(s, k);
    if (len == 0) return size() >= 2;
    if (len > lrs_len()) return false;
    if (k > r_) return true;
    NodeId ch = find(s, sym(k));
    if (!nodes_[ch].leaf) return true;
    if (!lrs_occ_is_two()) return false;
    Interval o = lrs_nonsuffix_occ();
    Pos p = nodes_[ch].pos;
    return o.start <= p && p <= o.end - len;
}

void SuffixTree::settle_secondary() {
    while (sqs_len() >= 1) {
        NodeId s = sq_node_;
        Pos k = sq_k_;
        drop_first(s, k);
        if (suffix_occ_ge3(s, k)) break;
        sq_node_ = s;
        sq_k_ = k;
    }
}

bool SuffixTree::lrs_occ_is_two() const {
    if (act_k_ > r_) return act_node_ == kRoot && size() == 1;
    return nodes_[find(act_node_, sym(act_k_))].leaf;
}

Interval SuffixTree::lrs_nonsuffix_occ() const {
    if (!lrs_occ_is_two()) throw PreconditionError("lrSuf does not occur exactly twice");
    if (act_k_ > r_) return {l_, l_ - 1};
    Pos p = nodes_[find(act_node_, sym(act_k_))].pos;
    return {p, p + lrs_len() - 1};
}

bool SuffixTree::sqs_occ_is_two() const {
    Pos len = sqs_len();
    if (len == 0) return size() == 1;
    return len <= lrs_len();
}

Interval SuffixTree::sqs_nonsuffix_occ() const {
    if (!sqs_occ_is_two()) throw PreconditionError("sqSuf does not occur exactly twice");
    Pos len = sqs_len();
    if (len == 0) return {l_, l_ - 1};
    NodeId ch = find(sq_node_, sym(sq_k_));
    if (ch == kNil || !nodes_[ch].leaf) throw InvariantError("secondary point is not on a leaf edge");
    Pos p = nodes_[ch].pos;
    return {p, p + len - 1};
}

SuffixTree::Hit SuffixTree::locate(Pos start, Pos end) const {
    NodeId s = kRoot;
    Pos k = start;
    while (k <= end) {
        NodeId ch = find(s, sym(k));
        if (ch == kNil) return {};
        Pos ls = label_start(ch);
        Pos el = edge_len(ch);
        Pos m = std::min(el, end - k + 1);
        for (Pos t = 1; t < m; ++t)
            if (sym(ls + t) != sym(k + t)) return {};
        if (m == el && !nodes_[ch].leaf) {
            s = ch;
            k += el;
            continue;
        }
        return {true, s, ch, m};
    }
    return {true, s, s, 0};
}

std::size_t SuffixTree::leaves_capped(NodeId v, std::size_t cap) const {
    if (nodes_[v].leaf) return 1;
    std::size_t n = 0;
    for (NodeId w = nodes_[v].first; w != kNil && n < cap; w = nodes_[w].next) n += leaves_capped(w, cap - n);
    return std::min(n, cap);
}

std::size_t SuffixTree::zone_occurrences(Pos start, Pos end, std::size_t cap) const {
    Pos len = end - start + 1;
    std::size_t n = 0;
    for (Pos q = r_ - lrs_len() + 1; q + len - 1 <= r_ && n < cap; ++q) {
        Pos t = 0;
        while (t < len && sym(q + t) == sym(start + t)) ++t;
        if (t == len) ++n;
    }
    return n;
}

std::size_t SuffixTree::occ_count_capped(const Interval& iv, std::size_t cap) const {
    if (iv.start < l_ || iv.end > r_ || iv.end < iv.start - 1)
        throw PreconditionError("interval " + to_string(iv) + " outside the window");
    if (cap == 0) return 0;
    Pos len = iv.length();
    if (len == 0) return std::min<std::size_t>(static_cast<std::size_t>(size() + 1), cap);
    Hit h = locate(iv.start, iv.end);
    if (!h.found) throw InvariantError("window substring missing from the tree");
    if (cap <= 2) {
        if (!nodes_[h.head].leaf) return cap;
        if (cap == 1 || !lrs_occ_is_two()) return 1;
        Interval o = lrs_nonsuffix_occ();
        Pos p = nodes_[h.head].pos;
        return o.start <= p && p <= o.end - len + 1 ? 2 : 1;
    }
    return std::min(cap, leaves_capped(h.head, cap) + zone_occurrences(iv.start, iv.end, cap));
}

PrefixState SuffixTree::prefix_state(bool with_head_run) const {
    PrefixState ps;
    const Pos n = size();
    if (n == 0) return ps;
    if (n == 1) {
        ps.lrp_two = true;
        ps.lrp_other = {l_ + 1, l_};
        ps.sqp_occ = 2;
        ps.sqp_other = {l_ + 1, l_};
        return ps;
    }
    NodeId leaf = sliding() ? leaf_slot(l_) : NodeId{1};
    NodeId h = nodes_[leaf].parent;
    const Pos depth_h = nodes_[h].depth;
    NodeId other_leaf = kNil;
    if (h != kRoot) {
        NodeId a = nodes_[h].first;
        NodeId b = nodes_[a].next;
        if (nodes_[b].next == kNil && nodes_[a].leaf && nodes_[b].leaf) other_leaf = a == leaf ? b : a;
    }
    // Prefixes up to `three` long sit above a node with >= 3 leaves.
    const Pos three = h == kRoot ? 0 : other_leaf != kNil ? nodes_[nodes_[h].parent].depth : depth_h;

    // Implicit suffixes that start with a prefix of W: top two prefix matches.
    Pos best1 = 0, best2 = 0, at1 = 0;
    for (Pos q = r_ - lrs_len() + 1; q <= r_; ++q) {
        Pos t = 0;
        while (q + t <= r_ && sym(q + t) == sym(l_ + t)) ++t;
        if (t > best1) {
            best2 = best1;
            best1 = t;
            at1 = q;
        } else if (t > best2) {
            best2 = t;
        }
    }
    auto leaves = [&](Pos len) -> int { return len <= three ? 3 : len <= depth_h ? 2 : 1; };
    auto imp = [&](Pos len) -> int { return (best1 >= len) + (best2 >= len); };
    auto other = [&](Pos len) -> Interval {
        Pos s = leaves(len) == 2 ? nodes_[other_leaf].pos : at1;
        return {s, s + len - 1};
    };

    ps.lrp_len = std::max(depth_h, best1);
    if (ps.lrp_len == 0) {
        ps.lrp_two = false;
    } else {
        ps.lrp_two = leaves(ps.lrp_len) + imp(ps.lrp_len) == 2;
        if (ps.lrp_two) ps.lrp_other = other(ps.lrp_len);
    }

    Pos m = std::max(three + 1, best1 + 1);
    if (m > depth_h) m = std::max({depth_h + 1, three + 1, best2 + 1});
    ps.sqp_len = m;
    ps.sqp_occ = static_cast<std::size_t>(leaves(m) + imp(m));
    if (ps.sqp_occ == 2) ps.sqp_other = other(m);

    if (with_head_run) {
        Symbol c = sym(l_);
        Pos e = 0;
        while (l_ + 1 + e <= r_ && sym(l_ + 1 + e) == c) ++e;
        ps.head_exp = e;
        ps.head_unique = e > 0 && occ_count_capped({l_ + 1, l_ + e}, 3) == 2;
    }
    return ps;
}

void SuffixTree::audit() const {
    std::size_t seen = 0;
    std::size_t leaves = 0;
    std::vector<NodeId> stack{kRoot};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        ++seen;
        const auto& nd = nodes_[v];
        if (nd.leaf) {
            ++leaves;
            if (nd.pos < l_ || nd.pos > r_) throw InvariantError("leaf start outside window");
            if (sliding() && leaf_slot(nd.pos) != v) throw InvariantError("leaf map out of sync");
        }
        if (v != kRoot) {
            Pos ls = label_start(v);
            if (ls < l_ || ls > r_) throw InvariantError("edge label starts outside window");
            if (!nd.leaf && ls + edge_len(v) - 1 > r_) throw InvariantError("edge label ends past window");
            if (sym(ls) != nd.head) throw InvariantError("edge head symbol mismatch");
            if (!nd.leaf) {
                if (nd.first == kNil || nodes_[nd.first].next == kNil)
                    throw InvariantError("internal node with fewer than two children");
                if (nd.link == kNil || nodes_[nd.link].leaf || nodes_[nd.link].depth != nd.depth - 1)
                    throw InvariantError("bad suffix link");
            }
        }
        std::vector<Symbol> heads;
        for (NodeId w = nd.first; w != kNil; w = nodes_[w].next) {
            if (nodes_[w].parent != v) throw InvariantError("parent pointer mismatch");
            heads.push_back(nodes_[w].head);
            stack.push_back(w);
        }
        std::sort(heads.begin(), heads.end());
        if (std::adjacent_find(heads.begin(), heads.end()) != heads.end())
            throw InvariantError("duplicate child symbol");
    }
    if (seen != live_nodes_) throw InvariantError("live node count mismatch");
    if (static_cast<Pos>(leaves) != size() - lrs_len() && size() > 0)
        throw InvariantError("leaf count differs from |W| - |lrSuf|");
}

void SuffixTree::canonical_rec(NodeId v, std::string& out) const {
    std::vector<std::pair<Symbol, NodeId>> kids;
    for (NodeId w = nodes_[v].first; w != kNil; w = nodes_[w].next) kids.emplace_back(nodes_[w].head, w);
    std::sort(kids.begin(), kids.end());
    out.push_back('(');
    for (auto [h, w] : kids) {
        Pos ls = label_start(w);
        Pos len = edge_len(w);
        out += std::to_string(len) + ':';
        for (Pos t = 0; t < len; ++t) out.push_back(static_cast<char>(sym(ls + t)));
        canonical_rec(w, out);
    }
    out.push_back(')');
}

std::string SuffixTree::canonical() const {
    std::string out;
    canonical_rec(kRoot, out);
    out += "|lrs=" + std::to_string(lrs_len()) + "|sqs=" + std::to_string(sqs_len());
    return out;
}

std::string SuffixTree::dot(const std::string& name) const {
    std::ostringstream os;
    os << "digraph " << name << " {\n  node [shape=circle];\n";
    os << "  label=\"l=" << l_ << " r=" << r_ << " lrSuf=" << lrs_len() << " sqSuf=" << sqs_len() << "\";\n";
    std::vector<NodeId> stack{kRoot};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        const auto& nd = nodes_[v];
        os << "  n" << v << " [label=\"" << v;
        if (nd.leaf)
            os << "\\n@" << nd.pos << "\" shape=box";
        else
            os << "\\nd=" << nd.depth << "\"";
        if (v == act_node_) os << " color=red";
        if (v == sq_node_) os << " style=bold";
        os << "];\n";
        if (v != kRoot) {
            Pos ls = label_start(v);
            os << "  n" << nd.parent << " -> n" << v << " [label=\"(" << ls << ","
               << ls + edge_len(v) - 1 << ")\"];\n";
            if (!nd.leaf && nd.link != kNil) os << "  n" << v << " -> n" << nd.link << " [style=dashed];\n";
        }
        for (NodeId w = nd.first; w != kNil; w = nodes_[w].next) stack.push_back(w);
    }
    os << "  active [shape=plaintext label=\"active: n" << act_node_ << " k=" << act_k_
       << "\\nsecondary: n" << sq_node_ << " k=" << sq_k_ << "\"];\n}\n";
    return os.str();
}

}  // namespace netocc::detail
