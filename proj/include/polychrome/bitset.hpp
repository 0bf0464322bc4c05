#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace polychrome {

/// Dynamic bitset over 0..size-1 with the handful of word-level operations
/// the search engines need.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int size) : size_(size), words_(static_cast<std::size_t>((size + 63) / 64), 0) {}

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    /// First set bit at index >= from, or -1.
    int next(int from = 0) const {
        if (from >= size_) return -1;
        auto wi = static_cast<std::size_t>(from >> 6);
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            if (++wi == words_.size()) return -1;
            w = words_[wi];
        }
    }

    int count_and(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace polychrome
