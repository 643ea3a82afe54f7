#include "netocc/eno_set.hpp"

#include <algorithm>

namespace netocc {

std::string to_string(const Interval& iv) {
    return "(" + std::to_string(iv.start) + "," + std::to_string(iv.end) + ")";
}

Pos EnoSet::next_start(Pos from) const {
    if (from < base_) from = base_;
    auto i = bits_.next(from - base_);
    return i == detail::LevelBitset::npos ? 0 : base_ + i;
}

Pos EnoSet::prev_start(Pos from) const {
    if (from < base_) return 0;
    auto i = bits_.prev(from - base_);
    return i == detail::LevelBitset::npos ? 0 : base_ + i;
}

// Make `start` addressable: slide the range up to the lowest live start, and
// double it when the live span needs more than half of it.
void EnoSet::cover(Pos start) {
    if (in_range(start)) return;
    Pos lo = start, hi = start;
    if (size_) {
        lo = std::min(lo, next_start(base_));
        hi = std::max(hi, prev_start(base_ + cap_ - 1));
    }
    Pos cap = std::max<Pos>(cap_, 256);
    while (cap < 2 * (hi - lo + 1)) cap *= 2;
    decltype(ends_) ends(static_cast<std::size_t>(cap), 0);
    detail::LevelBitset bits(cap);
    for (Pos s = size_ ? next_start(base_) : 0; s; s = next_start(s + 1)) {
        ends[static_cast<std::size_t>(s - lo)] = end_at(s);
        bits.set(s - lo);
    }
    base_ = lo;
    cap_ = cap;
    ends_.swap(ends);
    bits_ = std::move(bits);
}

bool EnoSet::contains(const Interval& iv) const { return iv.end > 0 && end_at(iv.start) == iv.end; }

bool EnoSet::insert(const Interval& iv) {
    if (iv.start < 1 || iv.length() < 2)
        throw InvariantError("ENO insert of malformed interval " + to_string(iv));
    if (Pos e = end_at(iv.start)) {
        if (e == iv.end) return false;
        throw InvariantError("ENO insert " + to_string(iv) + " shares start with " + to_string({iv.start, e}));
    }
    if (Pos s = next_start(iv.start); s && end_at(s) <= iv.end)
        throw InvariantError("ENO insert " + to_string(iv) + " contains " + to_string({s, end_at(s)}));
    if (Pos s = prev_start(iv.start); s && end_at(s) >= iv.end)
        throw InvariantError("ENO insert " + to_string(iv) + " contained in " + to_string({s, end_at(s)}));
    cover(iv.start);
    ends_[static_cast<std::size_t>(iv.start - base_)] = iv.end;
    bits_.set(iv.start - base_);
    ++size_;
    record(EventKind::add, iv);
    return true;
}

bool EnoSet::erase(const Interval& iv) {
    if (!contains(iv)) return false;
    ends_[static_cast<std::size_t>(iv.start - base_)] = 0;
    bits_.reset(iv.start - base_);
    --size_;
    record(EventKind::del, iv);
    return true;
}

bool EnoSet::erase_start(Pos start) {
    Pos e = end_at(start);
    return e && erase({start, e});
}

std::vector<Interval> EnoSet::snapshot() const {
    std::vector<Interval> out;
    out.reserve(size_);
    for (Pos s = size_ ? next_start(base_) : 0; s; s = next_start(s + 1)) out.push_back({s, end_at(s)});
    return out;
}

std::vector<DiffEvent> EnoSet::drain() {
    std::vector<DiffEvent> out;
    out.swap(pending_);
    return out;
}

void EnoSet::record(EventKind kind, const Interval& iv) {
    DiffEvent ev{step_, kind, iv, cause_, sym_};
    pending_.push_back(ev);
    if (keep_log_) log_.push_back(ev);
}

void EnoSet::audit() const {
    auto all = snapshot();
    if (all.size() != size_) throw InvariantError("ENO size out of sync");
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& cur = all[i];
        if (cur.length() < 2) throw InvariantError("ENO element too short " + to_string(cur));
        if (i == 0) continue;
        const auto& last = all[i - 1];
        if (cur.end <= last.end) throw InvariantError("ENO containment " + to_string(last) + " " + to_string(cur));
        if (cur.start > last.end) throw InvariantError("ENO gap " + to_string(last) + " " + to_string(cur));
    }
}

EnoSet EnoSet::replay(const std::vector<DiffEvent>& events) {
    EnoSet out;
    for (const auto& ev : events) {
        if (ev.kind == EventKind::add)
            out.insert(ev.interval);
        else
            out.erase(ev.interval);
    }
    return out;
}

}  // namespace netocc
