#include "netocc/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace netocc::oracle {

namespace {

// Occurrence counts of every non-empty substring.
class CountTable {
public:
    explicit CountTable(std::string_view t) : t_(t) {
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t len = 1; i + len <= t.size(); ++len) ++counts_[t.substr(i, len)];
    }
    std::size_t count(std::string_view w) const {
        if (w.empty()) return t_.size() + 1;
        auto it = counts_.find(w);
        return it == counts_.end() ? 0 : it->second;
    }
    // 1-based closed range; empty when end = start-1.
    std::size_t count(Pos start, Pos end) const { return count(sub(start, end)); }
    std::string_view sub(Pos start, Pos end) const {
        if (end < start) return {};
        return t_.substr(static_cast<std::size_t>(start - 1), static_cast<std::size_t>(end - start + 1));
    }

private:
    std::string_view t_;
    std::unordered_map<std::string_view, std::size_t> counts_;
};

Interval other_occurrence(std::string_view text, std::string_view w, Pos skip) {
    for (Pos p : occurrences(text, w))
        if (p != skip) return {p, p + static_cast<Pos>(w.size()) - 1};
    return {};
}

// Longest repeating suffix of every prefix T[1..e], via a suffix automaton.
// Transitions live in one flat linked-edge pool so repeated small calls
// (one per window) do not allocate per state.
std::vector<Pos> repeat_suffix_lengths(std::string_view t) {
    struct Edge {
        unsigned char c;
        int to;
        int next;
    };
    thread_local std::vector<Edge> edges;
    thread_local std::vector<Pos> len;
    thread_local std::vector<int> link, first, cnt, order, bucket;
    thread_local std::vector<Pos> best;
    edges.clear();
    len.assign(1, 0);
    link.assign(1, -1);
    first.assign(1, -1);
    cnt.assign(1, 0);

    auto go = [&](int v, unsigned char c) {
        for (int e = first[v]; e >= 0; e = edges[e].next)
            if (edges[e].c == c) return e;
        return -1;
    };
    auto add_state = [&](Pos l, int lk, int count) {
        len.push_back(l);
        link.push_back(lk);
        first.push_back(-1);
        cnt.push_back(count);
        return static_cast<int>(len.size()) - 1;
    };

    std::vector<int> prefix_state(t.size() + 1, 0);
    int last = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto c = static_cast<unsigned char>(t[i]);
        int cur = add_state(len[last] + 1, -1, 1);
        int p = last;
        for (; p != -1 && go(p, c) < 0; p = link[p]) {
            edges.push_back({c, cur, first[p]});
            first[p] = static_cast<int>(edges.size()) - 1;
        }
        if (p == -1) {
            link[cur] = 0;
        } else {
            int q = edges[go(p, c)].to;
            if (len[p] + 1 == len[q]) {
                link[cur] = q;
            } else {
                int clone = add_state(len[p] + 1, link[q], 0);
                for (int e = first[q]; e >= 0; e = edges[e].next) {
                    Edge copy = edges[e];
                    copy.next = first[clone];
                    edges.push_back(copy);
                    first[clone] = static_cast<int>(edges.size()) - 1;
                }
                for (int e; p != -1 && (e = go(p, c)) >= 0 && edges[e].to == q; p = link[p]) edges[e].to = clone;
                link[q] = clone;
                link[cur] = clone;
            }
        }
        last = cur;
        prefix_state[i + 1] = cur;
    }
    // Counting sort by len, then push endpos sizes up the links.
    std::size_t ns = len.size();
    bucket.assign(t.size() + 2, 0);
    for (std::size_t v = 0; v < ns; ++v) ++bucket[static_cast<std::size_t>(len[v])];
    for (std::size_t i = 1; i < bucket.size(); ++i) bucket[i] += bucket[i - 1];
    order.assign(ns, 0);
    for (int v = static_cast<int>(ns) - 1; v >= 0; --v) order[--bucket[static_cast<std::size_t>(len[v])]] = v;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (link[*it] >= 0) cnt[link[*it]] += cnt[*it];
    best.assign(ns, 0);
    for (int v : order) {
        if (v == 0) continue;
        best[v] = cnt[v] >= 2 ? len[v] : best[link[v]];
    }
    std::vector<Pos> lambda(t.size() + 1, 0);
    for (std::size_t e = 1; e <= t.size(); ++e) lambda[e] = best[prefix_state[e]];
    return lambda;
}

std::vector<Interval> eno_from_lambda(const std::vector<Pos>& lambda, Pos shift) {
    std::vector<Interval> out;
    Pos n = static_cast<Pos>(lambda.size()) - 1;
    for (Pos q = 2; q <= n; ++q) {
        Pos prev = (q - 1) - lambda[q - 1];
        Pos cur = q - lambda[q];
        if (prev >= 1 && cur > prev) out.push_back({prev + shift, q + shift});
    }
    return out;
}

}  // namespace

std::size_t occ(std::string_view text, std::string_view pattern) {
    if (pattern.empty()) return text.size() + 1;
    std::size_t n = 0;
    for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i)
        if (text.compare(i, pattern.size(), pattern) == 0) ++n;
    return n;
}

std::vector<Pos> occurrences(std::string_view text, std::string_view pattern) {
    std::vector<Pos> out;
    for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i)
        if (text.compare(i, pattern.size(), pattern) == 0) out.push_back(static_cast<Pos>(i) + 1);
    return out;
}

std::vector<Interval> eno(std::string_view text) {
    CountTable ct(text);
    Pos n = static_cast<Pos>(text.size());
    std::vector<Interval> out;
    // u = T[i..j]; j = i-1 is the empty slot between T[i-1] and T[i].
    for (Pos i = 2; i <= n; ++i) {
        for (Pos j = i - 1; j <= n - 1; ++j) {
            if (ct.count(i, j) < 2) continue;
            if (ct.count(i - 1, j) == 1 && ct.count(i, j + 1) == 1) out.push_back({i - 1, j + 1});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Interval> mus(std::string_view text) {
    CountTable ct(text);
    Pos n = static_cast<Pos>(text.size());
    std::vector<Interval> out;
    for (Pos i = 1; i <= n; ++i)
        for (Pos j = i; j <= n; ++j)
            if (ct.count(i, j) == 1 && ct.count(i + 1, j) >= 2 && ct.count(i, j - 1) >= 2)
                out.push_back({i, j});
    return out;
}

std::pair<Pos, bool> tail_run_for(std::string_view text, char c) {
    Pos e = 0;
    while (e < static_cast<Pos>(text.size()) && text[text.size() - 1 - e] == c) ++e;
    if (e == 0) return {0, false};
    return {e, occ(text, std::string(static_cast<std::size_t>(e), c)) == 1};
}

EndState lr_sq_ends(std::string_view text) {
    CountTable ct(text);
    EndState s;
    Pos n = static_cast<Pos>(text.size());

    for (Pos len = n; len >= 0; --len)
        if (ct.count(n - len + 1, n) >= 2) {
            s.lrs = len;
            break;
        }
    for (Pos len = 0; len <= n; ++len) {
        auto c = ct.count(n - len + 1, n);
        if (c <= 2) {
            s.sqs = len;
            s.sqs_occ = c;
            break;
        }
    }
    s.lrs_two = ct.count(n - s.lrs + 1, n) == 2;
    if (s.lrs_two) s.lrs_other = other_occurrence(text, ct.sub(n - s.lrs + 1, n), n - s.lrs + 1);
    if (s.sqs_occ == 2) s.sqs_other = other_occurrence(text, ct.sub(n - s.sqs + 1, n), n - s.sqs + 1);
    // Empty occurrences: the non-suffix slot of a 1-char text is (1,0).
    if (s.lrs == 0 && s.lrs_two) s.lrs_other = {1, 0};
    if (s.sqs == 0 && s.sqs_occ == 2) s.sqs_other = {1, 0};

    for (Pos len = n; len >= 0; --len)
        if (ct.count(1, len) >= 2) {
            s.lrp = len;
            break;
        }
    for (Pos len = 0; len <= n; ++len) {
        auto c = ct.count(1, len);
        if (c <= 2) {
            s.sqp = len;
            s.sqp_occ = c;
            break;
        }
    }
    s.lrp_two = ct.count(1, s.lrp) == 2;
    if (s.lrp_two) s.lrp_other = other_occurrence(text, ct.sub(1, s.lrp), 1);
    if (s.sqp_occ == 2) s.sqp_other = other_occurrence(text, ct.sub(1, s.sqp), 1);
    if (s.lrp == 0 && s.lrp_two) s.lrp_other = {2, 1};
    if (s.sqp == 0 && s.sqp_occ == 2) s.sqp_other = {2, 1};

    if (n > 0) {
        s.exp = 0;
        while (s.exp < n && text[static_cast<std::size_t>(n - 1 - s.exp)] == text.back()) ++s.exp;
        s.exp_unique = ct.count(n - s.exp + 1, n) == 1;

        std::string_view rest = text.substr(1);
        Pos e = 0;
        while (e < static_cast<Pos>(rest.size()) && rest[static_cast<std::size_t>(e)] == text[0]) ++e;
        s.exp_head = e;
        s.exp_head_unique = e > 0 && occ(rest, std::string(static_cast<std::size_t>(e), text[0])) == 1;
    }
    return s;
}

namespace {

struct Trie {
    struct Node {
        std::map<char, int> kids;
        bool suffix = false;
    };
    std::vector<Node> nodes{1};

    explicit Trie(std::string_view t) {
        for (std::size_t i = 0; i <= t.size(); ++i) {
            int v = 0;
            for (std::size_t k = i; k < t.size(); ++k) {
                auto it = nodes[v].kids.find(t[k]);
                if (it == nodes[v].kids.end()) {
                    nodes.emplace_back();
                    int id = static_cast<int>(nodes.size()) - 1;
                    nodes[v].kids.emplace(t[k], id);
                    v = id;
                } else {
                    v = it->second;
                }
            }
            nodes[v].suffix = true;
        }
    }
};

std::size_t cdawg_edges(std::string_view text, bool explicit_tree) {
    Trie trie(text);
    using Key = std::pair<bool, std::vector<std::pair<std::string, int>>>;
    std::map<Key, int> classes;
    std::vector<std::size_t> outdeg;

    auto kept = [&](int v) {
        const auto& nd = trie.nodes[v];
        return v == 0 || nd.kids.size() != 1 || (explicit_tree && nd.suffix);
    };
    // Post-order over the compacted tree; returns class id.
    auto sig = [&](auto&& self, int v) -> int {
        Key key;
        key.first = explicit_tree && v != 0 && trie.nodes[v].suffix;
        for (auto [c, w] : trie.nodes[v].kids) {
            std::string label(1, c);
            while (!kept(w)) {
                auto [c2, w2] = *trie.nodes[w].kids.begin();
                label.push_back(c2);
                w = w2;
            }
            key.second.emplace_back(std::move(label), self(self, w));
        }
        auto [it, fresh] = classes.emplace(std::move(key), static_cast<int>(outdeg.size()));
        if (fresh) outdeg.push_back(it->first.second.size());
        return it->second;
    };
    sig(sig, 0);
    std::size_t e = 0;
    for (auto d : outdeg) e += d;
    return e;
}

std::string nus_string(std::string_view text, const Interval& iv) {
    return std::string(text.substr(static_cast<std::size_t>(iv.start - 1),
                                   static_cast<std::size_t>(iv.length())));
}

}  // namespace

std::size_t explicit_cdawg_edges(std::string_view text) { return cdawg_edges(text, true); }
std::size_t implicit_cdawg_edges(std::string_view text) { return cdawg_edges(text, false); }

AuditReport prepend_diff_audit(std::string_view text, char c, LemmaForm form) {
    AuditReport rep;
    std::string ct_text = std::string(1, c) + std::string(text);
    std::string_view ct(ct_text);

    std::set<std::string> before, after;
    for (auto& iv : eno(text)) before.insert(nus_string(text, iv));
    for (auto& iv : eno(ct)) after.insert(nus_string(ct, iv));

    auto ends_ct = lr_sq_ends(ct);
    auto ends_t = lr_sq_ends(text);
    std::string lrp_ct(ct.substr(0, static_cast<std::size_t>(ends_ct.lrp)));
    std::string sqp_ct(ct.substr(0, static_cast<std::size_t>(ends_ct.sqp)));
    std::string lrp_t(text.substr(0, static_cast<std::size_t>(ends_t.lrp)));

    auto fail = [&](std::string what) {
        rep.ok = false;
        rep.violations.push_back(std::move(what) + " [T=" + std::string(text) + ", c=" + c + "]");
    };

    for (const auto& s : before) {
        if (after.count(s)) continue;
        std::string au = s.substr(0, s.size() - 1);
        std::string ub = s.substr(1);
        const std::string& to_sq = form == LemmaForm::printed ? au : ub;
        const std::string& to_lr = form == LemmaForm::printed ? ub : au;
        bool i = to_sq == sqp_ct && occ(ct, to_sq) == 2;
        bool ii = to_lr == lrp_ct && occ(ct, to_lr) == 2;
        if (!i && !ii) fail("lost NUS " + s + " not characterized");
    }
    for (const auto& s : after) {
        if (before.count(s)) continue;
        std::string u = s.substr(1, s.size() - 2);
        if (ct.compare(0, s.size(), s) != 0) {
            if (!(u == lrp_ct && occ(ct, u) == 2)) fail("gained non-prefix NUS " + s + " not characterized");
        } else {
            Pos e = 0;
            while (e < static_cast<Pos>(text.size()) && text[static_cast<std::size_t>(e)] == c) ++e;
            std::string run(static_cast<std::size_t>(e), c);
            bool i = u == lrp_t;
            bool ii = u == run && occ(text, u) == 1;
            if (!i && !ii) fail("gained prefix NUS " + s + " not characterized");
        }
    }
    return rep;
}

namespace {

// Longest proper prefix of `t` that occurs again somewhere in `t`.
Pos longest_repeating_prefix(std::string_view t) {
    Pos n = static_cast<Pos>(t.size());
    if (n <= 1) return 0;
    std::vector<Pos> z(static_cast<std::size_t>(n), 0);
    Pos best = 0;
    for (Pos i = 1, l = 0, r = 0; i < n; ++i) {
        Pos& zi = z[static_cast<std::size_t>(i)];
        if (i < r) zi = std::min(r - i, z[static_cast<std::size_t>(i - l)]);
        while (i + zi < n && t[static_cast<std::size_t>(zi)] == t[static_cast<std::size_t>(i + zi)]) ++zi;
        if (i + zi > r) l = i, r = i + zi;
        best = std::max(best, zi);
    }
    return best;
}

}  // namespace

std::pair<Pos, Pos> fast_lr_lengths(std::string_view text) {
    std::string rev(text.rbegin(), text.rend());
    return {longest_repeating_prefix(text), longest_repeating_prefix(rev)};
}

std::vector<Interval> fast_eno(std::string_view text) {
    return eno_from_lambda(repeat_suffix_lengths(text), 0);
}

std::vector<Interval> fast_mus(std::string_view text) {
    auto lambda = repeat_suffix_lengths(text);
    std::vector<Interval> out;
    Pos prev = 0;
    for (Pos j = 1; j < static_cast<Pos>(lambda.size()); ++j) {
        Pos a = j - lambda[j];
        if (a >= 1 && a > prev) out.push_back({a, j});
        prev = a;
    }
    return out;
}

std::vector<Interval> window_eno(std::string_view window, Pos base) {
    return eno_from_lambda(repeat_suffix_lengths(window), base - 1);
}

void PrefixEno::push(char c) {
    text_.push_back(c);
    Pos n = static_cast<Pos>(text_.size());
    lcs_.resize(static_cast<std::size_t>(n + 1), 0);
    lambda_.resize(static_cast<std::size_t>(n + 1), 0);
    Pos longest = 0;
    for (Pos e = n - 1; e >= 1; --e) {
        Pos v = text_[static_cast<std::size_t>(e - 1)] == c ? lcs_[static_cast<std::size_t>(e - 1)] + 1 : 0;
        lcs_[static_cast<std::size_t>(e)] = v;
        auto& lam = lambda_[static_cast<std::size_t>(e)];
        lam = std::max(lam, v);
        longest = std::max(longest, v);
    }
    lcs_[0] = 0;
    lambda_[static_cast<std::size_t>(n)] = longest;
}

std::vector<Interval> PrefixEno::eno() const { return eno_from_lambda(lambda_, 0); }

}  // namespace netocc::oracle
