#pragma once

// Maintains E = ENO(text) over any index backend. Appends follow the
// three-part update (sqSuf removal, lrSuf shift, suffix insertion); left
// deletions mirror it on the prefix side and verify every addition with
// capped occurrence counts after the structural delete.

#include <string_view>
#include <utility>
#include <vector>

#include "netocc/eno_set.hpp"
#include "netocc/types.hpp"

namespace netocc {

template <class Backend>
class EnoEngine {
public:
    template <class... Args>
    explicit EnoEngine(bool keep_log, Args&&... args) : index_(std::forward<Args>(args)...), set_(keep_log) {}

    std::vector<DiffEvent> append_char(Symbol c) {
        ++step_;
        set_.set_context(step_, Cause::append, c);
        const Pos lo = index_.first();
        const Pos r_old = index_.last();
        const Pos lrs_old = index_.lrs_len();
        const TailRun run = index_.tail_run_for(c);

        index_.append(c);

        if (index_.sqs_occ_is_two()) {
            Interval o = index_.sqs_nonsuffix_occ();
            set_.erase({o.start, o.end + 1});
        }
        if (index_.lrs_occ_is_two()) {
            Interval o = index_.lrs_nonsuffix_occ();
            if (o.start > lo) {
                set_.erase({o.start - 1, o.end});
                set_.insert({o.start - 1, o.end + 1});
            }
        }
        Pos start = lo - 1;
        if (index_.lrs_len() <= lrs_old)
            start = r_old - lrs_old;
        else if (run.unique)
            start = r_old - run.exp;
        if (start >= lo) set_.insert({start, r_old + 1});
        return set_.drain();
    }

    // Window backends only. Events carry the number of the next append, the
    // one that forces the slide.
    std::vector<DiffEvent> delete_leftmost_char() {
        if (index_.size() == 0) throw PreconditionError("delete from an empty window");
        set_.set_context(step_ + 1, Cause::delete_left, 0);
        const PrefixState ps = index_.prefix_state(false);
        const Pos lo = index_.first();

        set_.erase_start(lo);
        if (ps.lrp_two) set_.erase({ps.lrp_other.start - 1, ps.lrp_other.end + 1});

        index_.delete_leftmost();
        const Pos nlo = lo + 1, r = index_.last();

        auto occ = [&](Pos a, Pos b) { return index_.occ_count_capped({a, b}, 2); };
        // au = lrPref: the candidate keeps a, gains the right neighbour.
        if (ps.lrp_two) {
            auto [i, j] = std::pair{ps.lrp_other.start, ps.lrp_other.end};
            if (j + 1 <= r && i >= nlo && occ(i + 1, j) == 2 && occ(i + 1, j + 1) == 1 && occ(i, j) == 1)
                set_.insert({i, j + 1});
        }
        // ub = sqPref: the candidate keeps b, gains the left neighbour.
        if (ps.sqp_occ == 2) {
            auto [s, t] = std::pair{ps.sqp_other.start, ps.sqp_other.end};
            if (s - 1 >= nlo && occ(s, t - 1) == 2 && occ(s - 1, t - 1) == 1 && occ(s, t) == 1)
                set_.insert({s - 1, t});
        }
        return set_.drain();
    }

    // Sliding step: make room if the window is full, then append.
    std::vector<DiffEvent> slide(Symbol c) {
        std::vector<DiffEvent> out;
        if (index_.full()) out = delete_leftmost_char();
        auto add = append_char(c);
        out.insert(out.end(), add.begin(), add.end());
        return out;
    }

    std::vector<Interval> snapshot() const { return set_.snapshot(); }
    const EnoSet& eno() const { return set_; }
    const Backend& index() const { return index_; }
    Pos steps() const { return step_; }

    void audit() const {
        set_.audit();
        index_.audit();
    }

private:
    Backend index_;
    EnoSet set_;
    Pos step_ = 0;
};

// Feed a whole stream; `on_step(step, events)` sees the events of each symbol.
template <class Backend, class F>
EnoEngine<Backend> run_online(std::string_view stream, F&& on_step) {
    EnoEngine<Backend> eng(false);
    for (char ch : stream) on_step(eng.steps() + 1, eng.append_char(static_cast<Symbol>(ch)));
    return eng;
}

template <class Backend, class F>
EnoEngine<Backend> run_sliding(std::string_view stream, Pos d, F&& on_step) {
    EnoEngine<Backend> eng(false, d);
    for (char ch : stream) on_step(eng.steps() + 1, eng.slide(static_cast<Symbol>(ch)));
    return eng;
}

}  // namespace netocc
