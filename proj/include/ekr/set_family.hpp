#pragma once

// SetFamily: a finite collection of distinct subsets of [n], kept in
// lexicographic order of ascending element sequences. Carrier type for
// every family-level predicate in the library: uniformity, intersecting,
// stars, shadows, degrees, sunflowers, maximality.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ekr/element_set.hpp"

namespace ekr {

enum class FamilyDefect {
    NotIntersecting,
    Trivial,
    NotMaximal,
    NotUniform,
    Empty,
    GroundSetMismatch,
    TooLarge,
};

inline const char* defect_name(FamilyDefect d) {
    switch (d) {
        case FamilyDefect::NotIntersecting: return "NotIntersecting";
        case FamilyDefect::Trivial: return "Trivial";
        case FamilyDefect::NotMaximal: return "NotMaximal";
        case FamilyDefect::NotUniform: return "NotUniform";
        case FamilyDefect::Empty: return "Empty";
        case FamilyDefect::GroundSetMismatch: return "GroundSetMismatch";
        case FamilyDefect::TooLarge: return "TooLarge";
    }
    return "Unknown";
}

// Precondition failure on a family operation; carries the defect kind and,
// when one exists, a witness set demonstrating it.
class FamilyError : public std::runtime_error {
  public:
    FamilyError(FamilyDefect defect, std::string detail, std::vector<ElementSet> witnesses = {})
        : std::runtime_error(std::string(defect_name(defect)) + ": " + detail),
          defect_(defect),
          witnesses_(std::move(witnesses)) {}

    FamilyDefect defect() const { return defect_; }
    const std::vector<ElementSet>& witnesses() const { return witnesses_; }

  private:
    FamilyDefect defect_;
    std::vector<ElementSet> witnesses_;
};

class SetFamily {
  public:
    SetFamily() = default;

    // Blocks are sorted into lexicographic order; duplicates are rejected.
    SetFamily(int n, std::vector<Mask> blocks) : n_(n), blocks_(std::move(blocks)) {
        if (n_ < 0 || n_ > kMaxGroundSet)
            throw std::invalid_argument("ground set size out of range [0,64]");
        const Mask full = full_mask(n_);
        for (Mask b : blocks_)
            if (b & ~full)
                throw std::invalid_argument("block contains elements outside [1," +
                                            std::to_string(n_) + "]");
        std::sort(blocks_.begin(), blocks_.end(), lex_less);
        auto dup = std::adjacent_find(blocks_.begin(), blocks_.end());
        if (dup != blocks_.end())
            throw std::invalid_argument("duplicate block " + ElementSet(n_, *dup).str());
    }

    static SetFamily from_element_lists(int n, const std::vector<std::vector<int>>& lists) {
        std::vector<Mask> blocks;
        blocks.reserve(lists.size());
        for (const auto& l : lists) blocks.push_back(ElementSet::from_elements(n, l).bits);
        return SetFamily(n, std::move(blocks));
    }

    int n() const { return n_; }
    std::size_t size() const { return blocks_.size(); }
    bool empty() const { return blocks_.empty(); }
    const std::vector<Mask>& blocks() const { return blocks_; }
    Mask block(std::size_t i) const { return blocks_[i]; }
    ElementSet block_set(std::size_t i) const { return ElementSet(n_, blocks_[i]); }

    bool contains_block(Mask m) const {
        return std::binary_search(blocks_.begin(), blocks_.end(), m, lex_less);
    }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

  private:
    int n_ = 0;
    std::vector<Mask> blocks_;
};

inline bool is_uniform(const SetFamily& f, int k) {
    if (k < 0) throw std::invalid_argument("uniformity k must be >= 0");
    for (Mask b : f.blocks())
        if (popcount(b) != k) return false;
    return true;
}

inline void require_uniform(const SetFamily& f, int k) {
    for (Mask b : f.blocks())
        if (popcount(b) != k)
            throw FamilyError(FamilyDefect::NotUniform,
                              "block " + ElementSet(f.n(), b).str() + " has size " +
                                  std::to_string(popcount(b)) + ", expected " + std::to_string(k),
                              {ElementSet(f.n(), b)});
}

// Number of blocks containing each element, indexed 1..n.
inline std::vector<int> degree_vector(const SetFamily& f) {
    std::vector<int> deg(static_cast<std::size_t>(f.n()) + 1, 0);
    for (Mask b : f.blocks())
        for (Mask m = b; m; m &= m - 1) ++deg[static_cast<std::size_t>(first_element(m))];
    return deg;
}

// (element, degree) attaining the maximum degree; ties resolved toward the
// smallest element index so downstream decompositions are deterministic.
inline std::pair<int, int> max_degree(const SetFamily& f) {
    if (f.empty()) throw FamilyError(FamilyDefect::Empty, "max_degree of empty family");
    auto deg = degree_vector(f);
    int best = 1;
    for (int v = 2; v <= f.n(); ++v)
        if (deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(best)]) best = v;
    return {best, deg[static_cast<std::size_t>(best)]};
}

namespace detail {

// blocks_within[mask] = number of family blocks contained in mask, for all
// 2^n masks (subset-sum transform). Memory gate keeps this to n <= 27.
inline std::vector<std::uint32_t> blocks_within_table(const SetFamily& f) {
    const int n = f.n();
    if (n > 27) throw FamilyError(FamilyDefect::TooLarge, "subset table needs n <= 27");
    std::vector<std::uint32_t> cnt(std::size_t{1} << n, 0);
    for (Mask b : f.blocks()) ++cnt[b];
    for (int bit = 0; bit < n; ++bit) {
        const Mask step = Mask{1} << bit;
        for (Mask m = 0; m < (Mask{1} << n); ++m)
            if (m & step) cnt[m] += cnt[m ^ step];
    }
    return cnt;
}

}  // namespace detail

// Pairwise nonempty intersections; vacuously true for at most one block.
// Quadratic scan below a size threshold, subset-count table above it.
inline std::optional<std::pair<ElementSet, ElementSet>> find_disjoint_pair(const SetFamily& f) {
    const auto& blocks = f.blocks();
    const std::size_t m = blocks.size();
    if (m <= 4000 || f.n() > 27) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if ((blocks[i] & blocks[j]) == 0)
                    return std::make_pair(f.block_set(i), f.block_set(j));
        return std::nullopt;
    }
    auto cnt = detail::blocks_within_table(f);
    const Mask full = full_mask(f.n());
    for (std::size_t i = 0; i < m; ++i) {
        if (cnt[full & ~blocks[i]] > 0) {
            for (std::size_t j = 0; j < m; ++j)
                if (j != i && (blocks[i] & blocks[j]) == 0)
                    return std::make_pair(f.block_set(std::min(i, j)), f.block_set(std::max(i, j)));
        }
    }
    return std::nullopt;
}

inline bool is_intersecting(const SetFamily& f) { return !find_disjoint_pair(f).has_value(); }

inline void require_intersecting(const SetFamily& f) {
    if (auto pair = find_disjoint_pair(f))
        throw FamilyError(FamilyDefect::NotIntersecting,
                          "disjoint blocks " + pair->first.str() + " and " + pair->second.str(),
                          {pair->first, pair->second});
}

inline Mask common_intersection(const SetFamily& f) {
    Mask common = full_mask(f.n());
    for (Mask b : f.blocks()) common &= b;
    return common;
}

// All blocks share an element (the trivially intersecting configuration).
inline bool is_star(const SetFamily& f) { return common_intersection(f) != 0; }

// shadow to one size below: all (k-1)-subsets contained in some block.
inline SetFamily shadow(const SetFamily& f, int k) {
    if (k < 1) throw std::invalid_argument("shadow requires k >= 1");
    require_uniform(f, k);
    std::vector<Mask> out;
    out.reserve(f.size() * static_cast<std::size_t>(k));
    for (Mask b : f.blocks())
        for (Mask m = b; m; m &= m - 1) out.push_back(b & ~(m & (~m + 1)));
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return SetFamily(f.n(), std::move(out));
}

// If every pairwise intersection equals one fixed core, returns that core
// (= the intersection of all blocks). The pairwise requirement is stronger
// than having a common intersection; it is checked via petal disjointness.
inline std::optional<ElementSet> sunflower_core(const SetFamily& f) {
    if (f.size() < 2)
        throw FamilyError(FamilyDefect::Empty, "sunflower_core needs at least 2 blocks");
    const Mask core = common_intersection(f);
    Mask petals_union = 0;
    int petals_total = 0;
    for (Mask b : f.blocks()) {
        const Mask petal = b & ~core;
        petals_union |= petal;
        petals_total += popcount(petal);
    }
    if (petals_total != popcount(petals_union)) return std::nullopt;
    return ElementSet(f.n(), core);
}

// True iff no k-set outside the family meets every block, i.e. nothing can
// be added while keeping the family intersecting.
inline bool is_maximal_intersecting(const SetFamily& f, int k,
                                    ElementSet* addable_witness = nullptr) {
    require_uniform(f, k);
    require_intersecting(f);
    const int n = f.n();
    const Mask full = full_mask(n);
    if (n <= 27 && f.size() > 64) {
        auto cnt = detail::blocks_within_table(f);
        bool maximal = true;
        for_each_subset_of_size(full, k, [&](Mask a) {
            if (!maximal) return;
            if (cnt[full & ~a] == 0 && !f.contains_block(a)) {
                maximal = false;
                if (addable_witness) *addable_witness = ElementSet(n, a);
            }
        });
        return maximal;
    }
    bool maximal = true;
    for_each_subset_of_size(full, k, [&](Mask a) {
        if (!maximal || f.contains_block(a)) return;
        for (Mask b : f.blocks())
            if ((a & b) == 0) return;  // a cannot be added
        maximal = false;
        if (addable_witness) *addable_witness = ElementSet(n, a);
    });
    return maximal;
}

// Applies a permutation of [n] given as image[v] for v = 1..n.
inline SetFamily apply_permutation(const SetFamily& f, const std::vector<int>& image) {
    if (static_cast<int>(image.size()) != f.n() + 1)
        throw std::invalid_argument("permutation image must have n+1 entries (1-based)");
    std::vector<Mask> out;
    out.reserve(f.size());
    for (Mask b : f.blocks()) {
        Mask nb = 0;
        for (Mask m = b; m; m &= m - 1)
            nb |= element_bit(image[static_cast<std::size_t>(first_element(m))]);
        out.push_back(nb);
    }
    return SetFamily(f.n(), std::move(out));
}

}  // namespace ekr
