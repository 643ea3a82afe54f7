#pragma once

#include <cstddef>
#include <vector>

#include "netocc/detail/huge_alloc.hpp"
#include "netocc/detail/level_bitset.hpp"
#include "netocc/types.hpp"

namespace netocc {

enum class EventKind : std::uint8_t { add, del };
enum class Cause : std::uint8_t { append, delete_left };

struct DiffEvent {
    Pos step = 0;
    EventKind kind = EventKind::add;
    Interval interval;
    Cause cause = Cause::append;
    Symbol symbol = 0;  // appended symbol; unused for deletions

    friend bool operator==(const DiffEvent&, const DiffEvent&) = default;
};

// The set E of extended net occurrences. Starts are distinct, so E is an
// array of ends indexed by start plus a summary bitset for ordered walks.
// The array covers a sliding range of positions that is rebased or doubled
// when an insert falls outside it, so a window only pays for its own span.
class EnoSet {
public:
    explicit EnoSet(bool keep_log = false) : keep_log_(keep_log) {}

    bool contains(const Interval& iv) const;
    // Return true if the set changed.
    bool insert(const Interval& iv);
    bool erase(const Interval& iv);
    // Remove whatever interval starts at `start`.
    bool erase_start(Pos start);

    std::vector<Interval> snapshot() const;
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    // Context stamped onto events produced by subsequent mutations.
    void set_context(Pos step, Cause cause, Symbol sym) {
        step_ = step;
        cause_ = cause;
        sym_ = sym;
    }
    Pos step() const { return step_; }

    // Events since the last drain.
    std::vector<DiffEvent> drain();
    const std::vector<DiffEvent>& log() const { return log_; }

    // Throws InvariantError on containment, non-overlap, or bad lengths.
    void audit() const;

    static EnoSet replay(const std::vector<DiffEvent>& events);

private:
    void record(EventKind kind, const Interval& iv);
    bool in_range(Pos start) const { return start >= base_ && start < base_ + cap_; }
    Pos end_at(Pos start) const { return in_range(start) ? ends_[static_cast<std::size_t>(start - base_)] : 0; }
    Pos next_start(Pos from) const;  // smallest live start >= from, or 0
    Pos prev_start(Pos from) const;  // largest live start <= from, or 0
    void cover(Pos start);

    Pos base_ = 1;
    Pos cap_ = 0;
    std::vector<Pos, detail::HugeAlloc<Pos>> ends_;  // 0 = no element
    detail::LevelBitset bits_;
    std::size_t size_ = 0;
    std::vector<DiffEvent> pending_;
    std::vector<DiffEvent> log_;
    bool keep_log_;
    Pos step_ = 0;
    Cause cause_ = Cause::append;
    Symbol sym_ = 0;
};

}  // namespace netocc
