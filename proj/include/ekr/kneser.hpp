#pragma once

// Kneser-graph view of the search space: vertices are the k-subsets of
// [n] in lexicographic order, edges join disjoint sets. Intersecting
// families are exactly the independent sets.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ekr/bigint.hpp"
#include "ekr/element_set.hpp"
#include "ekr/set_family.hpp"

namespace ekr {

using VertexSet = boost::dynamic_bitset<unsigned long long>;

inline constexpr int kDefaultVertexBudget = 250;

struct KneserInstance {
    int n = 0;
    int k = 0;
    std::vector<Mask> vertices;            // k-set masks, lexicographic
    std::vector<VertexSet> adjacency;      // disjointness
    std::vector<VertexSet> contains;       // contains[e] = vertices through e (1-based)

    std::size_t vertex_count() const { return vertices.size(); }

    int vertex_index(Mask m) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), m, lex_less);
        if (it == vertices.end() || *it != m) return -1;
        return static_cast<int>(it - vertices.begin());
    }

    SetFamily family_of(const std::vector<int>& chosen) const {
        std::vector<Mask> blocks;
        blocks.reserve(chosen.size());
        for (int v : chosen) blocks.push_back(vertices[static_cast<std::size_t>(v)]);
        return SetFamily(n, std::move(blocks));
    }
};

inline KneserInstance build_instance(int n, int k, int vertex_budget = kDefaultVertexBudget) {
    if (k < 1 || k > n) throw std::domain_error("build_instance requires 1 <= k <= n");
    const BigInt count = binomial(n, k);
    if (count > vertex_budget)
        throw FamilyError(FamilyDefect::TooLarge,
                          "vertex budget exceeded: C(" + std::to_string(n) + "," +
                              std::to_string(k) + ") = " + count.str() + " > " +
                              std::to_string(vertex_budget));

    KneserInstance inst;
    inst.n = n;
    inst.k = k;
    for_each_subset_of_size(full_mask(n), k, [&](Mask m) { inst.vertices.push_back(m); });
    const std::size_t v = inst.vertices.size();

    inst.adjacency.assign(v, VertexSet(v));
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if ((inst.vertices[i] & inst.vertices[j]) == 0) {
                inst.adjacency[i].set(j);
                inst.adjacency[j].set(i);
            }

    inst.contains.assign(static_cast<std::size_t>(n) + 1, VertexSet(v));
    for (std::size_t i = 0; i < v; ++i)
        for (Mask m = inst.vertices[i]; m; m &= m - 1)
            inst.contains[static_cast<std::size_t>(first_element(m))].set(i);
    return inst;
}

}  // namespace ekr
