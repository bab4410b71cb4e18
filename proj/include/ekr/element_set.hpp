#pragma once

// ElementSet: a subset of the ground set [n] = {1, ..., n} packed into a
// 64-bit word. Element i occupies bit i-1. All public I/O is 1-based; the
// bit layout never leaks past this header's accessors.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ekr {

using Mask = std::uint64_t;

inline constexpr int kMaxGroundSet = 64;

// Mask with bits for elements 1..n set.
inline Mask full_mask(int n) {
    return (n >= kMaxGroundSet) ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline Mask element_bit(int element) { return Mask{1} << (element - 1); }

inline int popcount(Mask m) { return std::popcount(m); }

// Smallest element of a nonempty mask (1-based).
inline int first_element(Mask m) { return std::countr_zero(m) + 1; }

// Lexicographic order on the ascending element sequences of two sets.
// {1,4} < {2,3}; a proper prefix precedes its extensions ({1,2} < {1,2,3}).
inline bool lex_less(Mask a, Mask b) {
    if (a == b) return false;
    const Mask diff = a ^ b;
    const Mask low = diff & (~diff + 1);
    if (a & low) {
        // a owns the first differing element; a is smaller unless b has
        // already run out of elements at that point.
        return (b & ~(low | (low - 1))) != 0;
    }
    return (a & ~(low | (low - 1))) == 0;
}

struct ElementSet {
    int n = 0;
    Mask bits = 0;

    ElementSet() = default;
    ElementSet(int ground_size, Mask m) : n(ground_size), bits(m) {
        if (n < 0 || n > kMaxGroundSet)
            throw std::invalid_argument("ground set size out of range [0,64]: " + std::to_string(n));
        if (bits & ~full_mask(n))
            throw std::invalid_argument("set contains elements outside [1," + std::to_string(n) + "]");
    }

    static ElementSet from_elements(int n, const std::vector<int>& elems) {
        Mask m = 0;
        for (int e : elems) {
            if (e < 1 || e > n)
                throw std::invalid_argument("element " + std::to_string(e) + " outside [1," +
                                            std::to_string(n) + "]");
            m |= element_bit(e);
        }
        return ElementSet(n, m);
    }

    int size() const { return popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int element) const { return (bits & element_bit(element)) != 0; }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Mask m = bits; m; m &= m - 1) out.push_back(first_element(m));
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;
};

// Calls fn(mask) for every r-subset of the elements of `universe`,
// in lexicographic order of the ascending element sequences.
template <typename Fn>
void for_each_subset_of_size(Mask universe, int r, Fn&& fn) {
    std::vector<int> pool;
    for (Mask m = universe; m; m &= m - 1) pool.push_back(std::countr_zero(m));
    const int u = static_cast<int>(pool.size());
    if (r < 0 || r > u) return;
    if (r == 0) {
        fn(Mask{0});
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= Mask{1} << pool[static_cast<std::size_t>(i)];
        fn(m);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == u - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// All subsets of `universe` with size in [lo, hi], ascending by size,
// ties lexicographic. This is the generation order of the auxiliary
// condition-row families.
template <typename Fn>
void for_each_subset_sized_between(Mask universe, int lo, int hi, Fn&& fn) {
    for (int r = lo; r <= hi; ++r) for_each_subset_of_size(universe, r, fn);
}

}  // namespace ekr
