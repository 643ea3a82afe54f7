#include "netocc/cdawg_index.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>
#include <sstream>

namespace netocc {

namespace {
constexpr CdawgIndex::NodeId kNone = 0xffffffffu;

// Karp-Rabin over 2^61-1.
constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kBase = 1000003;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(x & kMod), hi = static_cast<std::uint64_t>(x >> 61);
    std::uint64_t s = lo + hi;
    return s >= kMod ? s - kMod : s;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, b = mulmod(b, b))
        if (e & 1) r = mulmod(r, b);
    return r;
}
}  // namespace

CdawgIndex::CdawgIndex() {
    nodes_.resize(2);
    nodes_[kSource].len = 0;
    nodes_[kSource].suf = kBottom;
    nodes_[kSink].sat = 1;
}

Pos CdawgIndex::node_len(NodeId v) const {
    if (v == kBottom) return -1;
    if (v == kSink) return r_;
    return nodes_[v].len;
}

CdawgIndex::Edge* CdawgIndex::edge(NodeId s, Symbol c) {
    auto& out = nodes_[s].out;
    auto it = std::lower_bound(out.begin(), out.end(), c, [](const Edge& e, Symbol x) { return e.head < x; });
    return it != out.end() && it->head == c ? &*it : nullptr;
}

const CdawgIndex::Edge* CdawgIndex::edge(NodeId s, Symbol c) const {
    return const_cast<CdawgIndex*>(this)->edge(s, c);
}

void CdawgIndex::add_edge(NodeId s, Edge e) {
    auto& out = nodes_[s].out;
    auto it = std::lower_bound(out.begin(), out.end(), e.head, [](const Edge& x, Symbol h) { return x.head < h; });
    out.insert(it, e);
    ++edges_;
    if (e.to != kSink) nodes_[e.to].in.push_back(s);
    refresh_sat(s);
}

void CdawgIndex::retarget(NodeId s, Edge& e, NodeId to) {
    if (e.to != kSink) {
        auto& in = nodes_[e.to].in;
        auto it = std::find(in.begin(), in.end(), s);
        *it = in.back();
        in.pop_back();
    }
    e.to = to;
    if (to != kSink) nodes_[to].in.push_back(s);
    refresh_sat(s);
}

void CdawgIndex::refresh_sat(NodeId v) {
    std::vector<NodeId> work{v};
    while (!work.empty()) {
        NodeId u = work.back();
        work.pop_back();
        int sum = 0;
        for (const auto& e : nodes_[u].out) sum = std::min(3, sum + sat_paths(e.to));
        if (sum == nodes_[u].sat) continue;
        nodes_[u].sat = sum;
        work.insert(work.end(), nodes_[u].in.begin(), nodes_[u].in.end());
    }
}

void CdawgIndex::canonize(NodeId& s, Pos& k, Pos p) const {
    if (k > p) return;
    if (s == kBottom) {
        s = kSource;
        ++k;
    }
    while (k <= p) {
        const Edge* e = edge(s, sym(k));
        if (!e) throw InvariantError("cdawg canonize walked off the graph");
        if (e->to == kSink) return;  // points on open edges stay put
        Pos len = edge_end(*e) - e->k + 1;
        if (len > p - k + 1) return;
        k += len;
        s = e->to;
    }
}

bool CdawgIndex::check_end_point(NodeId s, Pos k, Pos p, Symbol c) const {
    if (k <= p) {
        const Edge* e = edge(s, sym(k));
        return sym(e->k + p - k + 1) == c;
    }
    if (s == kBottom) return true;
    return edge(s, c) != nullptr;
}

CdawgIndex::NodeId CdawgIndex::split_edge(NodeId s, Pos k, Pos p) {
    Edge old = *edge(s, sym(k));
    Pos cut = p - k + 1;
    NodeId r = static_cast<NodeId>(nodes_.size());
    nodes_.emplace_back();
    nodes_[r].len = node_len(s) + cut;
    nodes_[r].out.push_back({old.k + cut, old.p, old.to, sym(old.k + cut)});
    ++edges_;
    if (old.to != kSink) {
        auto& in = nodes_[old.to].in;
        *std::find(in.begin(), in.end(), s) = r;
    }
    Edge* e = edge(s, sym(k));
    e->p = old.k + cut - 1;
    e->to = r;
    nodes_[r].in.push_back(s);
    nodes_[r].sat = sat_paths(old.to);
    if (old.to == kSink && s == primary_src_ && old.k == node_len(s) + 1) primary_src_ = r;
    return r;
}

void CdawgIndex::separate_node(NodeId& s, Pos& k, Pos p) {
    NodeId s1 = s;
    Pos k1 = k;
    canonize(s1, k1, p);
    if (k1 <= p || node_len(s1) == node_len(s) + (p - k + 1)) {
        s = s1;
        k = k1;
        return;
    }
    NodeId r = static_cast<NodeId>(nodes_.size());
    nodes_.emplace_back();
    nodes_[r].out = nodes_[s1].out;
    edges_ += nodes_[r].out.size();
    for (const auto& e : nodes_[r].out)
        if (e.to != kSink) nodes_[e.to].in.push_back(r);
    nodes_[r].len = node_len(s) + (p - k + 1);
    nodes_[r].sat = nodes_[s1].sat;
    nodes_[r].suf = nodes_[s1].suf;
    nodes_[s1].suf = r;
    while (true) {
        retarget(s, *edge(s, sym(k)), r);
        s = nodes_[s].suf;
        canonize(s, k, p - 1);
        NodeId t = s;
        Pos tk = k;
        canonize(t, tk, p);
        if (t != s1 || tk != k1) break;
    }
    s = r;
    k = p + 1;
}

void CdawgIndex::append(Symbol c) {
    if (r_ >= std::numeric_limits<std::int32_t>::max()) throw CapacityError("text too long");
    text_.push_back(c);
    prefix_hash_.push_back((mulmod(prefix_hash_.back(), kBase) + c + 1) % kMod);
    runs_.push(c);
    const Pos p = ++r_;
    const Pos sq_node_part = sq_len_ - (p - 1 - sq_k_ + 1);

    NodeId s = act_node_;
    Pos k = act_k_;
    NodeId oldr = kNone, sprime = kNone, r = kNone;
    while (!check_end_point(s, k, p - 1, c)) {
        if (k <= p - 1) {
            NodeId ext = edge(s, sym(k))->to;
            if (ext == sprime) {
                Edge* e = edge(s, sym(k));
                e->p = e->k + (p - 1 - k);
                retarget(s, *e, r);
                s = nodes_[s].suf;
                canonize(s, k, p - 1);
                continue;
            }
            sprime = ext;
            r = split_edge(s, k, p - 1);
        } else {
            r = s;
        }
        add_edge(r, {p, kOpen, kSink, c});
        if (oldr != kNone) nodes_[oldr].suf = r;
        oldr = r;
        s = nodes_[s].suf;
        canonize(s, k, p - 1);
    }
    if (oldr != kNone) nodes_[oldr].suf = s;
    separate_node(s, k, p);
    act_node_ = s;
    act_k_ = k;

    // Secondary point: same reference now spells z·c.
    ++sq_len_;
    while (sq_node_ != kSource && sq_node_part <= node_len(nodes_[sq_node_].suf)) sq_node_ = nodes_[sq_node_].suf;
    canonize(sq_node_, sq_k_, r_);
    settle_secondary();
}

void CdawgIndex::drop_first(NodeId& s, Pos& k, Pos& len) const {
    if (s == kSink) {
        // the whole text: restart from the source
        --len;
        s = kSource;
        k = r_ - len + 1;
        canonize(s, k, r_);
        return;
    }
    Pos node_part = len - (r_ - k + 1);
    --len;
    if (node_part == 0)
        ++k;
    else if (node_part - 1 <= node_len(nodes_[s].suf))
        s = nodes_[s].suf;
    canonize(s, k, r_);
}

bool CdawgIndex::suffix_occ_ge3(NodeId s, Pos k, Pos len) const {
    if (len == 0) return r_ >= 2;
    if (len > lrs_len()) return false;
    if (k > r_) return sat_paths(s) >= 2;
    const Edge* e = edge(s, sym(k));
    if (e->to != kSink) return sat_paths(e->to) >= 2;
    if (!lrs_occ_is_two()) return false;
    Interval o = lrs_nonsuffix_occ();
    Pos leaf = e->k + (r_ - k + 1) - len;
    return o.start <= leaf && leaf <= o.end - len;
}

void CdawgIndex::settle_secondary() {
    while (sq_len_ >= 1) {
        NodeId s = sq_node_;
        Pos k = sq_k_;
        Pos len = sq_len_;
        drop_first(s, k, len);
        if (suffix_occ_ge3(s, k, len)) break;
        sq_node_ = s;
        sq_k_ = k;
        sq_len_ = len;
    }
}

bool CdawgIndex::lrs_occ_is_two() const {
    if (act_k_ > r_) return act_node_ == kSource && r_ == 1;
    return edge(act_node_, sym(act_k_))->to == kSink;
}

Interval CdawgIndex::lrs_nonsuffix_occ() const {
    if (!lrs_occ_is_two()) throw PreconditionError("lrSuf does not occur exactly twice");
    if (act_k_ > r_) return {1, 0};
    const Edge* e = edge(act_node_, sym(act_k_));
    Pos end = e->k + (r_ - act_k_);
    return {end - lrs_len() + 1, end};
}

bool CdawgIndex::sqs_occ_is_two() const {
    if (sq_len_ == 0) return r_ == 1;
    return sq_len_ <= lrs_len();
}

Interval CdawgIndex::sqs_nonsuffix_occ() const {
    if (!sqs_occ_is_two()) throw PreconditionError("sqSuf does not occur exactly twice");
    if (sq_len_ == 0) return {1, 0};
    const Edge* e = sq_k_ <= r_ ? edge(sq_node_, sym(sq_k_)) : nullptr;
    if (!e || e->to != kSink) throw InvariantError("secondary point is not on a sink edge");
    Pos end = e->k + (r_ - sq_k_);
    return {end - sq_len_ + 1, end};
}

Pos CdawgIndex::lrpref_len() const {
    if (r_ == 0) return 0;
    Pos base = node_len(primary_src_);
    if (act_k_ <= r_ && act_node_ == primary_src_) {
        const Edge* e = edge(act_node_, sym(act_k_));
        if (e->to == kSink && e->k == base + 1) return base + (r_ - act_k_ + 1);
    }
    return base;
}

std::uint64_t CdawgIndex::label_hash(Pos k, Pos end) const {
    std::uint64_t hi = prefix_hash_[static_cast<std::size_t>(end)];
    std::uint64_t lo = mulmod(prefix_hash_[static_cast<std::size_t>(k - 1)], powmod(kBase, static_cast<std::uint64_t>(end - k + 1)));
    return hi >= lo ? hi - lo : hi + kMod - lo;
}

std::size_t CdawgIndex::edge_count() const {
    if (merged_at_ == r_) return merged_edges_;
    using Sig = std::vector<std::tuple<Pos, std::uint64_t, int>>;
    std::map<Sig, int> classes;
    std::vector<int> cls(nodes_.size(), -1);
    std::size_t total = 0;
    auto classify = [&](NodeId v) {
        Sig sig;
        for (const auto& e : nodes_[v].out) {
            Pos end = edge_end(e);
            sig.emplace_back(end - e.k + 1, label_hash(e.k, end), cls[e.to]);
        }
        auto [it, fresh] = classes.emplace(std::move(sig), static_cast<int>(classes.size()));
        if (fresh) total += nodes_[v].out.size();
        cls[v] = it->second;
    };
    // iterative post-order from the source
    std::vector<std::pair<NodeId, std::size_t>> stack{{kSource, 0}};
    std::vector<char> seen(nodes_.size(), 0);
    seen[kSource] = 1;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < nodes_[v].out.size()) {
            NodeId w = nodes_[v].out[i++].to;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back({w, 0});
            }
            continue;
        }
        classify(v);
        stack.pop_back();
    }
    merged_at_ = r_;
    merged_edges_ = total;
    return total;
}

std::vector<CdawgIndex::EdgeInfo> CdawgIndex::edges() const {
    std::vector<EdgeInfo> out;
    for (NodeId v = 0; v < nodes_.size(); ++v)
        for (const auto& e : nodes_[v].out) {
            Interval lab{e.k, edge_end(e)};
            out.push_back({v, e.to, lab, node_len(v) + lab.length() == node_len(e.to)});
        }
    return out;
}

void CdawgIndex::audit() const {
    std::size_t total = 0;
    std::vector<std::size_t> indeg(nodes_.size(), 0);
    std::vector<int> primaries(nodes_.size(), 0);
    for (NodeId v = 0; v < nodes_.size(); ++v) {
        const auto& nd = nodes_[v];
        if (v != kSource && v != kSink && nd.len <= node_len(nd.suf))
            throw InvariantError("suffix link does not shorten");
        for (std::size_t i = 0; i < nd.out.size(); ++i) {
            const auto& e = nd.out[i];
            if (i > 0 && nd.out[i - 1].head >= e.head) throw InvariantError("edges out of order");
            if (e.k < 1 || edge_end(e) > r_ || e.k > edge_end(e)) throw InvariantError("edge label out of range");
            if (sym(e.k) != e.head) throw InvariantError("edge head mismatch");
            ++indeg[e.to];
            if (node_len(v) + (edge_end(e) - e.k + 1) == node_len(e.to)) ++primaries[e.to];
            ++total;
        }
        int sum = 0;
        for (const auto& e : nd.out) sum = std::min(3, sum + sat_paths(e.to));
        if (v != kSink && sum != nd.sat) throw InvariantError("satPaths out of date");
        if (v != kSink && v != kSource && nd.out.size() < 2) throw InvariantError("non-branching node");
    }
    for (NodeId v = 0; v < nodes_.size(); ++v) {
        if (v != kSink && indeg[v] != nodes_[v].in.size()) throw InvariantError("in-edge list out of sync");
        if (v != kSource && r_ > 0 && primaries[v] != 1) throw InvariantError("node without a unique primary in-edge");
    }
    if (total != edges_) throw InvariantError("edge counter out of sync");
}

std::string CdawgIndex::dot() const {
    std::ostringstream os;
    os << "digraph cdawg {\n  node [shape=circle];\n";
    for (NodeId v = 0; v < nodes_.size(); ++v) {
        os << "  n" << v << " [label=\"" << (v == kSource ? "src" : v == kSink ? "sink" : std::to_string(v))
           << "\\nlen=" << node_len(v) << " sat=" << sat_paths(v) << "\"";
        if (v == act_node_) os << " color=red";
        os << "];\n";
        if (v != kSource && v != kSink) os << "  n" << v << " -> n" << nodes_[v].suf << " [style=dashed];\n";
    }
    for (const auto& e : edges())
        os << "  n" << e.from << " -> n" << e.to << " [label=\"(" << e.label.start << "," << e.label.end << ")\""
           << (e.primary ? " style=bold" : "") << "];\n";
    os << "  info [shape=plaintext label=\"active: n" << act_node_ << " k=" << act_k_ << "\\nsecondary: n"
       << sq_node_ << " k=" << sq_k_ << " len=" << sq_len_ << "\"];\n}\n";
    return os.str();
}

}  // namespace netocc
