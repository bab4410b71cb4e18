#pragma once

// Canonical labeling and isomorphism for set families at desk scale.
// canonical_form minimizes the sorted block list over all relabelings of
// [n]; families are isomorphic iff their canonical forms coincide. The
// permutation search is exact and refuses ground sets above a configured
// limit instead of degrading to a heuristic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ekr/set_family.hpp"

namespace ekr {

inline constexpr int kDefaultCanonicalLimit = 12;

namespace detail {

// Family comparison: lexicographic on the sorted block sequences.
inline bool family_lex_less(const std::vector<Mask>& a, const std::vector<Mask>& b) {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] != b[i]) return lex_less(a[i], b[i]);
    }
    return a.size() < b.size();
}

struct CanonicalSearch {
    int n;
    std::vector<Mask> blocks;        // original blocks
    std::vector<int> candidates;     // original elements ordered by labeling heuristic
    std::vector<Mask> best;          // best relabeled sorted block list so far
    std::vector<int> chosen;         // chosen[j] = original element mapped to new label j+1
    std::vector<bool> used;

    // Relabels under a full assignment new_of_old and returns sorted blocks.
    std::vector<Mask> relabel_full(const std::vector<int>& new_of_old) const {
        std::vector<Mask> out;
        out.reserve(blocks.size());
        for (Mask b : blocks) {
            Mask nb = 0;
            for (Mask m = b; m; m &= m - 1)
                nb |= element_bit(new_of_old[static_cast<std::size_t>(first_element(m))]);
            out.push_back(nb);
        }
        std::sort(out.begin(), out.end(), lex_less);
        return out;
    }

    // Decides, from the prefix assignment of new labels 1..depth, whether
    // every completion is strictly worse than `best`. Unassigned elements
    // all receive labels > depth, so within each block only the assigned
    // part is comparable; the rest is a tail of values > depth.
    //
    // Returns true when the branch can be pruned.
    bool prefix_worse_than_best(int depth, const std::vector<int>& new_of_old) const {
        // Padded truncation of each block: assigned part relabeled, plus a
        // count of elements that will land above `depth`.
        struct Padded {
            Mask known;
            int unknown;
        };
        std::vector<Padded> trunc;
        trunc.reserve(blocks.size());
        for (Mask b : blocks) {
            Mask known = 0;
            int unknown = 0;
            for (Mask m = b; m; m &= m - 1) {
                const int lbl = new_of_old[static_cast<std::size_t>(first_element(m))];
                if (lbl != 0)
                    known |= element_bit(lbl);
                else
                    ++unknown;
            }
            trunc.push_back({known, unknown});
        }
        // Order consistent with the eventual full order: compare the known
        // ascending sequence padded with `unknown` copies of a value that
        // compares above `depth` but below everything decided.
        auto padded_less = [depth](const Padded& a, const Padded& b) {
            auto ea = ElementSet(64, a.known).elements();
            auto eb = ElementSet(64, b.known).elements();
            std::size_t ia = 0, ib = 0;
            const std::size_t la = ea.size() + static_cast<std::size_t>(a.unknown);
            const std::size_t lb = eb.size() + static_cast<std::size_t>(b.unknown);
            for (std::size_t pos = 0; pos < std::min(la, lb); ++pos) {
                const int va = pos < ea.size() ? ea[pos] : depth + 1;
                const int vb = pos < eb.size() ? eb[pos] : depth + 1;
                if (va != vb) return va < vb;
                if (va == depth + 1) return false;  // both unknown: tie here and after
            }
            return la < lb;
        };
        std::sort(trunc.begin(), trunc.end(), padded_less);

        // Walk against best; prune only on a difference decided by labels
        // <= depth (completions cannot overturn those).
        for (std::size_t i = 0; i < trunc.size() && i < best.size(); ++i) {
            auto bs = ElementSet(64, best[i]).elements();
            auto ks = ElementSet(64, trunc[i].known).elements();
            const std::size_t len =
                ks.size() + static_cast<std::size_t>(trunc[i].unknown);
            for (std::size_t pos = 0; pos < std::min(len, bs.size()); ++pos) {
                if (pos < ks.size()) {
                    if (ks[pos] < bs[pos]) return false;  // strictly better possible
                    if (ks[pos] > bs[pos]) return true;   // decided worse
                } else {
                    // Completion value > depth at this position.
                    if (bs[pos] <= depth) return true;
                    return false;  // undecided
                }
            }
            if (len != bs.size()) return false;  // length difference: leave to full compare
        }
        return false;
    }

    void dfs(int depth, std::vector<int>& new_of_old) {
        if (depth == n) {
            auto full = relabel_full(new_of_old);
            if (family_lex_less(full, best)) best = std::move(full);
            return;
        }
        if (prefix_worse_than_best(depth, new_of_old)) return;
        for (int orig : candidates) {
            if (used[static_cast<std::size_t>(orig)]) continue;
            used[static_cast<std::size_t>(orig)] = true;
            new_of_old[static_cast<std::size_t>(orig)] = depth + 1;
            dfs(depth + 1, new_of_old);
            new_of_old[static_cast<std::size_t>(orig)] = 0;
            used[static_cast<std::size_t>(orig)] = false;
        }
    }
};

}  // namespace detail

inline SetFamily canonical_form(const SetFamily& f, int limit = kDefaultCanonicalLimit) {
    if (f.n() > limit)
        throw FamilyError(FamilyDefect::TooLarge,
                          "canonicalization limited to n <= " + std::to_string(limit) +
                              ", got n = " + std::to_string(f.n()));
    if (f.empty() || f.n() == 0) return f;

    detail::CanonicalSearch search;
    search.n = f.n();
    search.blocks = f.blocks();
    search.used.assign(static_cast<std::size_t>(f.n()) + 1, false);

    // Heuristic candidate order: high degree first (high-degree elements
    // tend to receive small labels in the minimum), ties by index.
    auto deg = degree_vector(f);
    search.candidates.resize(static_cast<std::size_t>(f.n()));
    std::iota(search.candidates.begin(), search.candidates.end(), 1);
    std::stable_sort(search.candidates.begin(), search.candidates.end(),
                     [&](int a, int b) {
                         return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
                     });

    // Seed with the heuristic labeling so pruning is effective immediately.
    std::vector<int> seed(static_cast<std::size_t>(f.n()) + 1, 0);
    for (int j = 0; j < f.n(); ++j)
        seed[static_cast<std::size_t>(search.candidates[static_cast<std::size_t>(j)])] = j + 1;
    search.best = search.relabel_full(seed);

    std::vector<int> assignment(static_cast<std::size_t>(f.n()) + 1, 0);
    search.dfs(0, assignment);
    return SetFamily(f.n(), search.best);
}

inline void require_same_ground_set(const SetFamily& a, const SetFamily& b) {
    if (a.n() != b.n())
        throw FamilyError(FamilyDefect::GroundSetMismatch,
                          "n = " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

inline bool is_isomorphic(const SetFamily& a, const SetFamily& b,
                          int limit = kDefaultCanonicalLimit) {
    require_same_ground_set(a, b);
    if (a.size() != b.size()) return false;
    // Cheap invariants first: block size multiset and degree sequence.
    auto sizes = [](const SetFamily& f) {
        std::vector<int> s;
        s.reserve(f.size());
        for (Mask m : f.blocks()) s.push_back(popcount(m));
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sizes(a) != sizes(b)) return false;
    auto degs = [](const SetFamily& f) {
        auto d = degree_vector(f);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;
    return canonical_form(a, limit) == canonical_form(b, limit);
}

// True iff some permutation pi of [n] has pi(F) a subfamily of T.
// Backtracking over block images with an injective element map.
inline bool is_subfamily_up_to_iso(const SetFamily& f, const SetFamily& t,
                                   int limit = kDefaultCanonicalLimit) {
    require_same_ground_set(f, t);
    if (f.n() > limit)
        throw FamilyError(FamilyDefect::TooLarge,
                          "subfamily embedding limited to n <= " + std::to_string(limit) +
                              ", got n = " + std::to_string(f.n()));
    if (f.size() > t.size()) return false;
    if (f.empty()) return true;

    const int n = f.n();
    // Most-constrained-first block order: larger blocks and higher overlap
    // with previously placed support reduce the branching factor.
    std::vector<std::size_t> arranged;
    std::vector<bool> taken(f.size(), false);
    Mask support = 0;
    for (std::size_t step = 0; step < f.size(); ++step) {
        std::size_t pick = f.size();
        int best_overlap = -1, best_size = -1;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (taken[i]) continue;
            const int ov = popcount(f.block(i) & support);
            const int sz = popcount(f.block(i));
            if (ov > best_overlap || (ov == best_overlap && sz > best_size)) {
                best_overlap = ov;
                best_size = sz;
                pick = i;
            }
        }
        taken[pick] = true;
        arranged.push_back(pick);
        support |= f.block(pick);
    }

    std::vector<int> img(static_cast<std::size_t>(n) + 1, 0);  // element map, 0 = unset
    std::vector<bool> img_used(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> tblock_used(t.size(), false);

    std::function<bool(std::size_t)> place = [&](std::size_t step) -> bool {
        if (step == arranged.size()) return true;
        const Mask fb = f.block(arranged[step]);
        const int fsz = popcount(fb);
        for (std::size_t ti = 0; ti < t.size(); ++ti) {
            if (tblock_used[ti]) continue;
            const Mask tb = t.block(ti);
            if (popcount(tb) != fsz) continue;
            // Mapped elements of fb must land inside tb.
            bool compatible = true;
            Mask t_taken_inside = 0;
            std::vector<int> unmapped;
            for (Mask m = fb; m; m &= m - 1) {
                const int e = first_element(m);
                const int ie = img[static_cast<std::size_t>(e)];
                if (ie != 0) {
                    if (!(tb & element_bit(ie))) {
                        compatible = false;
                        break;
                    }
                    t_taken_inside |= element_bit(ie);
                } else {
                    unmapped.push_back(e);
                }
            }
            if (!compatible) continue;
            // tb elements already used as images of elements outside fb are
            // unavailable.
            Mask t_avail = tb & ~t_taken_inside;
            for (Mask m = t_avail; m; m &= m - 1)
                if (img_used[static_cast<std::size_t>(first_element(m))])
                    t_avail &= ~(m & (~m + 1));
            if (popcount(t_avail) < static_cast<int>(unmapped.size())) continue;

            // Assign unmapped source elements to an ordered selection of
            // available targets (permutations matter).
            std::vector<int> targets = ElementSet(64, t_avail).elements();
            const std::size_t u = unmapped.size();
            // Iterate injections via permutation prefixes.
            std::vector<int> sel(u, -1);
            std::vector<bool> tgt_used(targets.size(), false);
            std::function<bool(std::size_t)> inject = [&](std::size_t pos) -> bool {
                if (pos == u) {
                    tblock_used[ti] = true;
                    if (place(step + 1)) return true;
                    tblock_used[ti] = false;
                    return false;
                }
                for (std::size_t c = 0; c < targets.size(); ++c) {
                    if (tgt_used[c]) continue;
                    tgt_used[c] = true;
                    const int e = unmapped[pos];
                    img[static_cast<std::size_t>(e)] = targets[c];
                    img_used[static_cast<std::size_t>(targets[c])] = true;
                    if (inject(pos + 1)) return true;
                    img_used[static_cast<std::size_t>(targets[c])] = false;
                    img[static_cast<std::size_t>(e)] = 0;
                    tgt_used[c] = false;
                }
                return false;
            };
            if (inject(0)) return true;
        }
        return false;
    };
    return place(0);
}

}  // namespace ekr
