#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace zdg {

// Dynamic fixed-width bitset tuned for the cover solver: word-parallel set
// algebra, popcounts, and ascending iteration over members. Trailing bits of
// the last word are kept zero so equality and ordering are plain word
// comparisons.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(uint32_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static Bitset full(uint32_t size) {
        Bitset b(size);
        for (auto& w : b.words_) w = ~uint64_t{0};
        b.trim();
        return b;
    }

    uint32_t size() const { return size_; }

    bool test(uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(uint32_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(uint32_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

    uint32_t count() const {
        uint32_t c = 0;
        for (uint64_t w : words_) c += static_cast<uint32_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // True when every member of o is also a member of *this.
    bool contains(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // this \ o
    Bitset& subtract(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }
    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset and_not(Bitset a, const Bitset& b) { a.subtract(b); return a; }

    // Index of the least member, or -1 when empty.
    int find_first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    // Calls f(index) for each member in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                f(static_cast<uint32_t>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<uint32_t> to_vector() const {
        std::vector<uint32_t> out;
        out.reserve(count());
        for_each([&](uint32_t i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;
    friend auto operator<=>(const Bitset&, const Bitset&) = default;

private:
    void trim() {
        if (size_ & 63) words_.back() &= (uint64_t{1} << (size_ & 63)) - 1;
    }

    uint32_t size_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace zdg
