#pragma once

// Fixed-size bitset with 64-ary summary levels: set/reset and next/prev set
// bit in O(levels).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace netocc::detail {

class LevelBitset {
public:
    static constexpr std::int64_t npos = -1;

    explicit LevelBitset(std::int64_t size = 0) { resize(size); }

    void resize(std::int64_t size) {
        size_ = size;
        levels_.clear();
        std::int64_t n = size;
        do {
            n = (n + 63) / 64;
            levels_.emplace_back(static_cast<std::size_t>(std::max<std::int64_t>(n, 1)), 0);
        } while (n > 1);
    }
    std::int64_t size() const { return size_; }

    bool test(std::int64_t i) const { return levels_[0][word(i)] >> (i & 63) & 1; }

    void set(std::int64_t i) {
        for (auto& lv : levels_) {
            std::uint64_t& w = lv[word(i)];
            bool was_empty = w == 0;
            w |= bit(i);
            if (!was_empty) return;
            i >>= 6;
        }
    }

    void reset(std::int64_t i) {
        for (auto& lv : levels_) {
            std::uint64_t& w = lv[word(i)];
            w &= ~bit(i);
            if (w != 0) return;
            i >>= 6;
        }
    }

    // Smallest set index >= i.
    std::int64_t next(std::int64_t i) const {
        if (i < 0) i = 0;
        if (i >= size_) return npos;
        std::size_t lv = 0;
        while (true) {
            const auto& words = levels_[lv];
            std::size_t wi = word(i);
            if (wi >= words.size()) return npos;
            std::uint64_t w = words[wi] & (~std::uint64_t{0} << (i & 63));
            if (w) {
                i = (i & ~std::int64_t{63}) | std::countr_zero(w);
                break;
            }
            // bit wi+1 one level up covers the following word
            i = static_cast<std::int64_t>(wi) + 1;
            if (++lv == levels_.size()) return npos;
        }
        return descend(lv, i, true);
    }

    // Largest set index <= i.
    std::int64_t prev(std::int64_t i) const {
        if (i >= size_) i = size_ - 1;
        if (i < 0) return npos;
        std::size_t lv = 0;
        while (true) {
            std::size_t wi = word(i);
            std::uint64_t mask = (i & 63) == 63 ? ~std::uint64_t{0} : (bit(i) << 1) - 1;
            std::uint64_t w = levels_[lv][wi] & mask;
            if (w) {
                i = (i & ~std::int64_t{63}) | (63 - std::countl_zero(w));
                break;
            }
            if (wi == 0 || ++lv == levels_.size()) return npos;
            i = static_cast<std::int64_t>(wi) - 1;
        }
        return descend(lv, i, false);
    }

private:
    std::int64_t descend(std::size_t lv, std::int64_t i, bool lowest) const {
        while (lv > 0) {
            std::uint64_t w = levels_[--lv][static_cast<std::size_t>(i)];
            i = i << 6 | (lowest ? std::countr_zero(w) : 63 - std::countl_zero(w));
        }
        return i;
    }

    static std::size_t word(std::int64_t i) { return static_cast<std::size_t>(i >> 6); }
    static std::uint64_t bit(std::int64_t i) { return std::uint64_t{1} << (i & 63); }

    std::int64_t size_ = 0;
    std::vector<std::vector<std::uint64_t>> levels_;
};

}  // namespace netocc::detail
