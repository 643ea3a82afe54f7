#include "netocc/mus_bridge.hpp"

#include <algorithm>
#include <string>

namespace netocc {

std::vector<Interval> mus_to_eno(const std::vector<Interval>& mus) {
    std::vector<Interval> out;
    for (std::size_t i = 1; i < mus.size(); ++i) {
        const auto& a = mus[i - 1];
        const auto& b = mus[i];
        if (b.start <= a.start || b.end <= a.end) throw PreconditionError("MUS list not sorted or not containment-free");
        out.push_back({a.start, b.end});
    }
    return out;
}

std::vector<Interval> eno_to_mus(const std::vector<Interval>& eno, Pos lrpref_len, Pos lrsuf_len, Pos n) {
    if (n < 1) return {};
    Interval pre{1, lrpref_len + 1}, suf{n - lrsuf_len, n};
    if (pre.end > n || suf.start < 1) throw PreconditionError("sentinel outside the text");
    std::vector<Interval> l = eno;
    l.push_back(pre);
    l.push_back(suf);
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (l.size() == 1) return l;
    std::vector<Interval> out;
    for (std::size_t i = 1; i < l.size(); ++i) out.push_back({l[i].start, l[i - 1].end});
    return out;
}

void OnlineMus::bump(const Interval& m, int sign) {
    auto& c = count_[m];
    before_.try_emplace(m, c > 0);
    c += sign;
    if (c < 0) throw InvariantError("negative MUS contribution for " + to_string(m));
    if (c == 0) count_.erase(m);
}

// Add or withdraw the MUS contributions of a distinct element of L.
void OnlineMus::link(const Interval& iv, int sign) {
    auto it = l_.find(iv);
    auto prev = it == l_.begin() ? l_.end() : std::prev(it);
    auto next = std::next(it);
    bool has_prev = prev != l_.end(), has_next = next != l_.end();
    auto pair_mus = [](const Interval& a, const Interval& b) { return Interval{b.start, a.end}; };
    if (!has_prev && !has_next) {
        bump(iv, sign);
        return;
    }
    if (l_.size() == 2) {
        const Interval& other = has_prev ? prev->first : next->first;
        bump(other, -sign);
    } else if (has_prev && has_next) {
        bump(pair_mus(prev->first, next->first), -sign);
    }
    if (has_prev) bump(pair_mus(prev->first, iv), sign);
    if (has_next) bump(pair_mus(iv, next->first), sign);
}

void OnlineMus::l_add(const Interval& iv) {
    if (++l_[iv] == 1) link(iv, +1);
}

void OnlineMus::l_remove(const Interval& iv) {
    auto it = l_.find(iv);
    if (it == l_.end()) throw InvariantError("removing " + to_string(iv) + " absent from L");
    if (it->second > 1) {
        --it->second;
        return;
    }
    link(iv, -1);
    l_.erase(it);
}

std::vector<DiffEvent> OnlineMus::append(Symbol c) {
    for (const auto& ev : engine_.append_char(c)) {
        if (ev.kind == EventKind::add)
            l_add(ev.interval);
        else
            l_remove(ev.interval);
    }
    const auto& idx = engine_.index();
    Pos n = idx.size();
    Interval pre{1, idx.lrpref_len() + 1}, suf{n - idx.lrs_len(), n};
    if (n > 1) {
        l_remove(pre_);
        l_remove(suf_);
    }
    l_add(pre);
    l_add(suf);
    pre_ = pre;
    suf_ = suf;

    std::vector<DiffEvent> out;
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& [m, was] : before_) {
            bool now = count_.count(m) > 0;
            if (was == now) continue;
            if (pass == 0 && was) {
                mus_.erase(m);
                out.push_back({engine_.steps(), EventKind::del, m, Cause::append, c});
            } else if (pass == 1 && now) {
                mus_.insert(m);
                out.push_back({engine_.steps(), EventKind::add, m, Cause::append, c});
            }
        }
    before_.clear();
    if (keep_log_) log_.insert(log_.end(), out.begin(), out.end());
    return out;
}

}  // namespace netocc
