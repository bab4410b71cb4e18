#pragma once

// Decomposition of a maximal non-trivial intersecting family around its
// maximum-degree element p, and the condition system built on top of it:
//   F0 : blocks avoiding p            F1 : blocks through p
//   H  : subsets of [n]-p, size <= k-2
//   G  : subsets through p, size <= k-1
//   S  : (k-1)-sets avoiding p, outside the shadow of F1, missing at
//        least one block of F0.

#include <algorithm>
#include <string>
#include <vector>

#include "ekr/intersection_conditions.hpp"
#include "ekr/set_family.hpp"

namespace ekr {

struct Decomposition {
    int n = 0;
    int k = 0;
    int p = 0;     // max-degree element, smallest index on ties
    SetFamily f0;  // blocks avoiding p, lexicographic order
    SetFamily f1;  // blocks containing p
    SetFamily h;   // auxiliary low sets avoiding p
    SetFamily g;   // auxiliary low sets through p
    SetFamily s;   // qualifying non-shadow (k-1)-sets
    int x = 0;     // |f0|
    bool maximality_checked = true;
};

// Splits the family around its max-degree element. Preconditions are
// checked and violations carry witnesses: the family must be k-uniform,
// intersecting, non-trivial, and (unless check_maximal is false, the
// escape hatch for negative tests) maximal.
inline Decomposition decompose(const SetFamily& f, int k, bool check_maximal = true) {
    if (f.n() < 2 * k + 1)
        throw std::domain_error("decompose requires n >= 2k+1");
    require_uniform(f, k);
    require_intersecting(f);
    if (f.empty()) throw FamilyError(FamilyDefect::Empty, "cannot decompose an empty family");
    if (common_intersection(f) != 0)
        throw FamilyError(FamilyDefect::Trivial,
                          "all blocks share element " +
                              std::to_string(first_element(common_intersection(f))));
    if (check_maximal) {
        ElementSet addable;
        if (!is_maximal_intersecting(f, k, &addable))
            throw FamilyError(FamilyDefect::NotMaximal, "block " + addable.str() + " can be added",
                              {addable});
    }

    Decomposition d;
    d.n = f.n();
    d.k = k;
    d.p = max_degree(f).first;
    d.maximality_checked = check_maximal;

    const Mask pm = element_bit(d.p);
    std::vector<Mask> f0, f1;
    for (Mask b : f.blocks()) ((b & pm) ? f1 : f0).push_back(b);
    d.f0 = SetFamily(d.n, std::move(f0));
    d.f1 = SetFamily(d.n, std::move(f1));
    d.x = static_cast<int>(d.f0.size());

    const Mask rest = full_mask(d.n) & ~pm;
    std::vector<Mask> h, g;
    for_each_subset_sized_between(rest, 0, k - 2, [&](Mask m) {
        h.push_back(m);
        g.push_back(m | pm);
    });
    d.h = SetFamily(d.n, std::move(h));
    d.g = SetFamily(d.n, std::move(g));

    // The shadow of F1 restricted to p-free sets is exactly {F - p}.
    std::vector<Mask> shadow_f1;
    shadow_f1.reserve(d.f1.size());
    for (Mask b : d.f1.blocks()) shadow_f1.push_back(b & ~pm);
    std::sort(shadow_f1.begin(), shadow_f1.end(), lex_less);

    std::vector<Mask> s;
    for_each_subset_of_size(rest, k - 1, [&](Mask m) {
        if (std::binary_search(shadow_f1.begin(), shadow_f1.end(), m, lex_less)) return;
        for (Mask b : d.f0.blocks()) {
            if ((m & b) == 0) {
                s.push_back(m);
                return;
            }
        }
    });
    d.s = SetFamily(d.n, std::move(s));
    return d;
}

// Row order: H before F1 before G before S; H and G ascending by size with
// lexicographic ties, F1 and S lexicographic. Conditions per row:
//   H : ({h}, 0) for h in H, plus ([n], n-k-1)
//   F1: (F - p, beta) for beta = 0..k-2, witness F - p
//   G : ({g}, 0) for g in G
//   S : ({s}, 0) for s in S
// padded to exactly s = k-1 conditions by repeating the first.
inline ConditionSystem build_condition_system(const Decomposition& d) {
    ConditionSystem sys;
    sys.n = d.n;
    sys.s = d.k - 1;

    auto singleton_rows = [&](const SetFamily& fam, const std::string& prefix, bool global_row) {
        // Ascending by size, ties lexicographic: blocks are already in lex
        // order, so a stable sort on size alone preserves ties.
        std::vector<Mask> blocks = fam.blocks();
        std::stable_sort(blocks.begin(), blocks.end(),
                         [](Mask a, Mask b) { return popcount(a) < popcount(b); });
        for (Mask m : blocks) {
            ConditionRow row;
            row.witness = ElementSet(d.n, m);
            row.label = prefix + ":" + row.witness.str();
            std::vector<IntersectionCondition> conds;
            for (Mask bit = m; bit; bit &= bit - 1)
                conds.emplace_back(ElementSet(d.n, bit & (~bit + 1)), 0);
            if (global_row)
                conds.emplace_back(ElementSet(d.n, full_mask(d.n)), d.n - d.k - 1);
            row.conditions = ConditionSystem::pad(std::move(conds), sys.s);
            sys.rows.push_back(std::move(row));
        }
    };

    singleton_rows(d.h, "H", true);

    const Mask pm = element_bit(d.p);
    for (Mask b : d.f1.blocks()) {
        ConditionRow row;
        row.witness = ElementSet(d.n, b & ~pm);
        row.label = "F1:" + ElementSet(d.n, b).str();
        std::vector<IntersectionCondition> conds;
        for (int beta = 0; beta <= d.k - 2; ++beta)
            conds.emplace_back(row.witness, beta);
        row.conditions = ConditionSystem::pad(std::move(conds), sys.s);
        sys.rows.push_back(std::move(row));
    }

    singleton_rows(d.g, "G", false);
    singleton_rows(d.s, "S", false);

    sys.validate();
    return sys;
}

}  // namespace ekr
