#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace minorkit {

// Fixed-capacity bitset whose size is chosen at construction.  Vertices of a
// graph on n vertices live in a Bitset of capacity n.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int bits) : nbits_(bits), words_((bits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() { std::fill(words_.begin(), words_.end(), std::uint64_t{0}); }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool intersects(const Bitset & o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset & o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset & operator|=(const Bitset & o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset & operator&=(const Bitset & o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset & subtract(const Bitset & o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    // Lowest set bit, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    template <typename F>
    void for_each(F && f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(int(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(const Bitset &, const Bitset &) = default;

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace minorkit
