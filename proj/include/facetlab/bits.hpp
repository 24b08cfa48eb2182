#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace facetlab {

// Bitset over a fixed universe {0,...,universe-1}. Used for vertex sets,
// facet (row) sets and adjacency rows. Word layout is little-endian:
// element i lives in word i/64, bit i%64.
class Bits {
public:
    Bits() = default;
    explicit Bits(int universe) : n_(universe), w_(words_for(universe), 0) {}

    static Bits full(int universe) {
        Bits b(universe);
        for (auto& w : b.w_) w = ~uint64_t(0);
        b.trim();
        return b;
    }
    static Bits single(int universe, int i) {
        Bits b(universe);
        b.set(i);
        return b;
    }
    static Bits of(int universe, std::initializer_list<int> xs) {
        Bits b(universe);
        for (int x : xs) b.set(x);
        return b;
    }
    static Bits from(int universe, const std::vector<int>& xs) {
        Bits b(universe);
        for (int x : xs) b.set(x);
        return b;
    }

    int universe() const { return n_; }

    bool test(int i) const { return (w_[size_t(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[size_t(i) >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[size_t(i) >> 6] &= ~(uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    void reset_all() {
        for (auto& w : w_) w = 0;
    }
    // dst = a & b without reallocating dst
    static void and_into(Bits& dst, const Bits& a, const Bits& b) {
        dst.n_ = a.n_;
        dst.w_.resize(a.w_.size());
        for (size_t i = 0; i < a.w_.size(); ++i) dst.w_[i] = a.w_[i] & b.w_[i];
    }
    // this &= ~o
    void subtract(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }

    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        r &= o;
        return r;
    }
    Bits operator|(const Bits& o) const {
        Bits r = *this;
        r |= o;
        return r;
    }
    // set difference
    Bits minus(const Bits& o) const {
        Bits r = *this;
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
        return r;
    }

    bool subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool proper_subset_of(const Bits& o) const { return subset_of(o) && *this != o; }
    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool operator==(const Bits& o) const { return w_ == o.w_; }
    bool operator!=(const Bits& o) const { return w_ != o.w_; }

    // first set element, -1 if empty
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + __builtin_ctzll(w_[i]);
        return -1;
    }
    // next set element strictly after `after`, -1 if none
    int next(int after) const {
        int i = after + 1;
        if (i >= n_) return -1;
        size_t wi = size_t(i) >> 6;
        uint64_t w = w_[wi] & (~uint64_t(0) << (i & 63));
        while (true) {
            if (w) return int(wi * 64) + __builtin_ctzll(w);
            if (++wi >= w_.size()) return -1;
            w = w_[wi];
        }
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(size_t(count()));
        for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                fn(int(wi * 64) + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
    }

    // Order used throughout for deterministic output: by cardinality,
    // then by the smallest element where the sets differ (the set owning
    // that element comes first). On equal cardinalities this is exactly
    // lexicographic order of the sorted element lists.
    static bool canon_less(const Bits& a, const Bits& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return lex_less(a, b);
    }
    static bool lex_less(const Bits& a, const Bits& b) {
        for (size_t i = 0; i < a.w_.size(); ++i) {
            uint64_t d = a.w_[i] ^ b.w_[i];
            if (d) {
                uint64_t lowest = d & (~d + 1);
                return a.w_[i] & lowest;
            }
        }
        return false;
    }

    size_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ uint64_t(n_);
        for (uint64_t w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return size_t(h);
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    static size_t words_for(int n) { return (size_t(n) + 63) / 64; }
    void trim() {
        if (n_ & 63) w_.back() &= (~uint64_t(0)) >> (64 - (n_ & 63));
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitsHash {
    size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace facetlab
