#pragma once

// ENO <-> MUS conversion, and MUS maintenance on top of the CDAWG engine.

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "netocc/cdawg_index.hpp"
#include "netocc/eno_engine.hpp"
#include "netocc/types.hpp"

namespace netocc {

// Consecutive MUSs [a..h], [k..b] give the extended net occurrence [a..b].
std::vector<Interval> mus_to_eno(const std::vector<Interval>& mus);

// L = eno + [1..lrp+1] + [n-lrs..n]; consecutive [h..j], [i..k] in L give
// the MUS [i..j]. A one-element L is its own MUS.
std::vector<Interval> eno_to_mus(const std::vector<Interval>& eno, Pos lrpref_len, Pos lrsuf_len, Pos n);

class OnlineMus {
public:
    explicit OnlineMus(bool keep_log = false) : engine_(false), keep_log_(keep_log) {}

    // MUS events caused by appending c.
    std::vector<DiffEvent> append(Symbol c);
    std::vector<Interval> snapshot() const { return {mus_.begin(), mus_.end()}; }
    std::size_t size() const { return mus_.size(); }
    const EnoEngine<CdawgIndex>& engine() const { return engine_; }
    const std::vector<DiffEvent>& log() const { return log_; }

private:
    void l_add(const Interval& iv);
    void l_remove(const Interval& iv);
    void link(const Interval& iv, int sign);
    void bump(const Interval& m, int sign);

    EnoEngine<CdawgIndex> engine_;
    std::map<Interval, int> l_;  // L with multiplicities, ordered by (start, end)
    std::set<Interval> mus_;
    std::map<Interval, int> count_;    // MUS contributions
    std::map<Interval, bool> before_;  // presence at the start of the step
    Interval pre_{}, suf_{};
    bool keep_log_;
    std::vector<DiffEvent> log_;
};

}  // namespace netocc
