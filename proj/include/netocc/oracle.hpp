#pragma once

// Brute-force reference implementations. Slow on purpose; the fast_* helpers
// are independent quadratic/linear routes used when the naive ones are too
// slow for randomized suites, and are themselves checked against the naive
// ones.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "netocc/types.hpp"

namespace netocc::oracle {

// #occ_T(w); the empty pattern occurs |T|+1 times.
std::size_t occ(std::string_view text, std::string_view pattern);
// 1-based starts of all occurrences (empty pattern: 1..|T|+1).
std::vector<Pos> occurrences(std::string_view text, std::string_view pattern);

std::vector<Interval> eno(std::string_view text);
std::vector<Interval> mus(std::string_view text);

struct EndState {
    Pos lrs = 0;  // |lrSuf|
    Pos sqs = 0;  // |sqSuf|
    std::size_t sqs_occ = 0;  // 1 or 2
    Interval lrs_other{};     // non-suffix occurrence when #occ(lrSuf) == 2
    Interval sqs_other{};
    bool lrs_two = false;

    Pos lrp = 0;
    Pos sqp = 0;
    std::size_t sqp_occ = 0;
    Interval lrp_other{};  // non-prefix occurrence when #occ(lrPref) == 2
    Interval sqp_other{};
    bool lrp_two = false;

    Pos exp = 0;  // run of T[n] at the end
    bool exp_unique = false;
    Pos exp_head = 0;  // max e with T[1]^e a prefix of T[2..n]
    bool exp_head_unique = false;  // #occ_{T[2..n]}(T[1]^exp_head) == 1
};
EndState lr_sq_ends(std::string_view text);
// (|lrPref|, |lrSuf|) in linear time from Z-arrays of the text and its reverse.
std::pair<Pos, Pos> fast_lr_lengths(std::string_view text);

// Run of `c` ending the text, and whether that run string is unique.
// Mirrors the tail-run query made just before appending c.
std::pair<Pos, bool> tail_run_for(std::string_view text, char c);

std::size_t explicit_cdawg_edges(std::string_view text);
std::size_t implicit_cdawg_edges(std::string_view text);

struct AuditReport {
    bool ok = true;
    std::vector<std::string> violations;
};
// How to read the prefix-side "lost NUS" characterization. `printed` keeps the
// letters of the append-side statement (au = sqPref, ub = lrPref); `mirrored`
// swaps them as a left-right reflection does (ub = sqPref, au = lrPref).
enum class LemmaForm { printed, mirrored };

// NUS(T) vs NUS(cT) against the three prefix-side characterizations.
AuditReport prepend_diff_audit(std::string_view text, char c, LemmaForm form = LemmaForm::mirrored);

// A(e) = e - (longest suffix of T[1..e] occurring twice in T), the start of
// the shortest unique substring ending at e. ENO/MUS fall out of its jumps.
std::vector<Interval> fast_eno(std::string_view text);
std::vector<Interval> fast_mus(std::string_view text);

// Incremental ENO of every prefix in O(i) per step.
class PrefixEno {
public:
    void push(char c);
    std::vector<Interval> eno() const;
    Pos size() const { return static_cast<Pos>(text_.size()); }
    const std::string& text() const { return text_; }

private:
    std::string text_;
    std::vector<Pos> lcs_;     // lcs_[e] = common suffix length of T[1..e] and T[1..n]
    std::vector<Pos> lambda_;  // lambda_[e] = longest repeating suffix of T[1..e]
};

// ENO of a window with positions shifted to start at `base`.
std::vector<Interval> window_eno(std::string_view window, Pos base);

}  // namespace netocc::oracle
