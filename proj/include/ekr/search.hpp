#pragma once

// Exact maximum intersecting families under forbidden-configuration
// constraints, found as maximum independent sets in the Kneser graph by
// branch and bound over bitset candidate sets, plus exhaustive
// enumeration of maximal families at tiny scale.
//
// Constraint semantics:
//   forbid_trivial      final family is not inside any full star
//   forbidden_templates final family is not inside any relabeled copy
//   max_degree_cap      every element degree stays at or below the cap
//   fixed_f0 = x        element 1 attains the (weak) maximum degree and
//                       exactly x chosen blocks avoid it
//
// Two passes: the first establishes the optimum with aggressive pruning,
// the second re-walks the tree keeping everything that can still tie the
// optimum and collects every optimal family. Both are deterministic.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ekr/canonical.hpp"
#include "ekr/kneser.hpp"
#include "ekr/set_family.hpp"

namespace ekr {

struct SearchConstraints {
    bool forbid_trivial = false;
    std::vector<SetFamily> forbidden_templates;
    std::optional<int> fixed_f0;        // element 1 plays the max-degree role
    std::optional<int> max_degree_cap;
};

enum class SearchAlgorithm {
    Auto,            // star-complement for template-only constraints, else plain
    Plain,           // direct branch and bound over all vertices
    StarComplement,  // branch over the blocks avoiding element 1
};

struct SearchOptions {
    double timeout_seconds = 600.0;
    bool all_witnesses = true;
    int canonical_limit = kDefaultCanonicalLimit;
    SearchAlgorithm algorithm = SearchAlgorithm::Auto;
};

struct SearchResult {
    bool feasible = false;
    long long optimum = -1;
    std::vector<SetFamily> witnesses;  // canonical forms, deduplicated, sorted
    std::uint64_t node_count = 0;
    double elapsed_seconds = 0.0;
    bool timed_out = false;
};

namespace detail {

// All distinct vertex sets {v : block(v) in pi(T)} over relabelings pi.
// Distinctness is resolved on the relabeled block list.
inline std::vector<VertexSet> template_vertex_sets(const KneserInstance& inst,
                                                   const std::vector<SetFamily>& templates,
                                                   bool forbid_trivial) {
    std::vector<VertexSet> out;
    if (forbid_trivial)
        for (int e = 1; e <= inst.n; ++e) out.push_back(inst.contains[static_cast<std::size_t>(e)]);

    std::unordered_set<std::string> seen;
    for (const auto& t : templates) {
        if (t.n() != inst.n)
            throw FamilyError(FamilyDefect::GroundSetMismatch,
                              "template ground set " + std::to_string(t.n()));
        std::vector<int> image(static_cast<std::size_t>(inst.n) + 1);
        std::iota(image.begin(), image.end(), 0);
        std::vector<Mask> relabeled(t.size());
        do {
            for (std::size_t b = 0; b < t.size(); ++b) {
                Mask nb = 0;
                for (Mask m = t.block(b); m; m &= m - 1)
                    nb |= element_bit(image[static_cast<std::size_t>(first_element(m))]);
                relabeled[b] = nb;
            }
            std::sort(relabeled.begin(), relabeled.end());
            std::string key;
            key.reserve(relabeled.size() * sizeof(Mask));
            for (Mask m : relabeled)
                key.append(reinterpret_cast<const char*>(&m), sizeof(Mask));
            if (seen.insert(std::move(key)).second) {
                VertexSet vs(inst.vertex_count());
                for (Mask m : relabeled) {
                    const int idx = inst.vertex_index(m);
                    if (idx >= 0) vs.set(static_cast<std::size_t>(idx));
                }
                out.push_back(std::move(vs));
            }
        } while (std::next_permutation(image.begin() + 1, image.end()));
    }
    return out;
}

// Cyclic-arc tables: for every cyclic arrangement of [n] (element 1 held
// first), the n consecutive k-windows as vertex indices. Any independent
// set meets the arcs of one arrangement in at most k vertices, and every
// vertex is an arc of exactly k!(n-k)! arrangements, so
//   alpha(cand) <= sum_sigma min(k, |cand & arcs(sigma)|) / (k!(n-k)!).
// This is exact on the full vertex set and stays tight near stars, which
// is where the matching bound is weakest.
struct ArcTables {
    int n = 0, k = 0;
    std::size_t order_count = 0;
    std::vector<std::uint16_t> arcs;  // order*n + position -> vertex id
    long long normalizer = 1;

    void build(const KneserInstance& inst) {
        n = inst.n;
        k = inst.k;
        normalizer = 1;
        for (int i = 2; i <= k; ++i) normalizer *= i;
        for (int i = 2; i <= n - k; ++i) normalizer *= i;

        std::vector<int> tail(static_cast<std::size_t>(n) - 1);
        std::iota(tail.begin(), tail.end(), 2);
        std::vector<int> seq(static_cast<std::size_t>(n));
        do {
            seq[0] = 1;
            std::copy(tail.begin(), tail.end(), seq.begin() + 1);
            for (int s = 0; s < n; ++s) {
                Mask arc = 0;
                for (int i = 0; i < k; ++i)
                    arc |= element_bit(seq[static_cast<std::size_t>((s + i) % n)]);
                const int v = inst.vertex_index(arc);
                arcs.push_back(static_cast<std::uint16_t>(v));
            }
            ++order_count;
        } while (std::next_permutation(tail.begin(), tail.end()));
    }

    long long bound(const VertexSet& cand) const {
        long long total = 0;
        const std::uint16_t* a = arcs.data();
        for (std::size_t o = 0; o < order_count; ++o, a += n) {
            int cnt = 0;
            for (int pos = 0; pos < n; ++pos) {
                if (cand.test(a[pos]) && ++cnt == k) break;
            }
            total += cnt;
        }
        return total / normalizer;
    }
};

struct Searcher {
    const KneserInstance& inst;
    const SearchConstraints& cons;
    std::vector<VertexSet> templates;   // stars first when forbid_trivial
    ArcTables arc_tables;
    double timeout_seconds;
    std::chrono::steady_clock::time_point start;

    long long best = -1;                 // current optimum lower bound
    bool collecting = false;             // pass 2 flag
    std::vector<std::vector<int>> solutions;
    std::uint64_t nodes = 0;
    bool timed_out = false;

    std::vector<int> cur;
    std::vector<int> degree;             // element degrees of cur, 1-based
    int count0 = 0;                      // chosen blocks avoiding element 1

    Searcher(const KneserInstance& i, const SearchConstraints& c, double timeout)
        : inst(i), cons(c), timeout_seconds(timeout) {
        degree.assign(static_cast<std::size_t>(inst.n) + 1, 0);
        start = std::chrono::steady_clock::now();
    }

    bool out_of_time() {
        if (timed_out) return true;
        if ((nodes & 0xfff) == 0) {
            const auto now = std::chrono::steady_clock::now();
            if (std::chrono::duration<double>(now - start).count() > timeout_seconds)
                timed_out = true;
        }
        return timed_out;
    }

    // Largest clique in a Kneser graph at n < 3k is an edge, so a greedy
    // matching inside the candidate set certifies |cand| - matched as an
    // upper bound on any independent subset.
    int independence_bound(const VertexSet& cand) const {
        VertexSet scratch = cand;
        int total = 0, matched = 0;
        for (auto v = scratch.find_first(); v != VertexSet::npos; v = scratch.find_first()) {
            scratch.reset(v);
            ++total;
            const VertexSet nbrs = inst.adjacency[v] & scratch;
            const auto u = nbrs.find_first();
            if (u != VertexSet::npos) {
                scratch.reset(u);
                ++total;
                ++matched;
            }
        }
        return total - matched;
    }

    bool degree_cap_allows(int vertex) const {
        if (!cons.max_degree_cap) return true;
        for (Mask m = inst.vertices[static_cast<std::size_t>(vertex)]; m; m &= m - 1)
            if (degree[static_cast<std::size_t>(first_element(m))] + 1 > *cons.max_degree_cap)
                return false;
        return true;
    }

    // Weak maximum at element 1, checked at completion.
    bool fixed_f0_leaf_ok() const {
        if (!cons.fixed_f0) return true;
        if (count0 != *cons.fixed_f0) return false;
        for (int e = 2; e <= inst.n; ++e)
            if (degree[static_cast<std::size_t>(e)] > degree[1]) return false;
        return true;
    }

    void record_leaf(const std::vector<int>& leaf_cur, std::size_t live_count) {
        if (live_count != 0) return;  // inside some forbidden configuration
        if (!fixed_f0_leaf_ok()) return;
        const long long size = static_cast<long long>(leaf_cur.size());
        if (size > best) {
            best = size;
            if (collecting) solutions.clear();
        }
        if (collecting && size == best) solutions.push_back(leaf_cur);
    }

    // live: indices into templates with cur inside the template.
    void dfs(VertexSet cand, const std::vector<int>& live) {
        ++nodes;
        if (out_of_time()) return;

        // Constraint propagation.
        if (cons.fixed_f0 && count0 == *cons.fixed_f0) cand &= inst.contains[1];
        if (cons.max_degree_cap) {
            for (int e = 1; e <= inst.n; ++e)
                if (degree[static_cast<std::size_t>(e)] >= *cons.max_degree_cap)
                    cand -= inst.contains[static_cast<std::size_t>(e)];
        }

        // Forbidden-configuration prune: if everything reachable stays
        // inside one live template, no completion is valid.
        for (int t : live)
            if (cand.is_subset_of(templates[static_cast<std::size_t>(t)])) return;

        if (cand.none()) {
            record_leaf(cur, live.size());
            return;
        }

        // Bounds.
        long long ub = static_cast<long long>(cur.size()) + independence_bound(cand);
        if (cons.fixed_f0) {
            const long long zero_room = *cons.fixed_f0 - count0;
            const long long one_side = static_cast<long long>((cand & inst.contains[1]).count());
            ub = std::min(ub, static_cast<long long>(cur.size()) + zero_room + one_side);
        }
        if (cons.max_degree_cap) {
            long long capacity = 0;
            for (int e = 1; e <= inst.n; ++e)
                capacity += std::max(0, *cons.max_degree_cap - degree[static_cast<std::size_t>(e)]);
            ub = std::min(ub, static_cast<long long>(cur.size()) + capacity / inst.k);
        }
        auto prunable = [&](long long bound) { return collecting ? (bound < best) : (bound <= best); };
        if (prunable(ub)) return;

        // The arc bound is pricier, so consult it only where the cheap
        // bounds failed to close the node.
        if (!arc_tables.arcs.empty()) {
            ub = std::min(ub,
                          static_cast<long long>(cur.size()) + arc_tables.bound(cand));
            if (prunable(ub)) return;
        }

        // Take-all shortcut: an internally edge-free candidate set has a
        // unique maximum completion, and surviving the live prune above
        // makes that completion valid for the template constraints.
        if (!cons.fixed_f0 && !cons.max_degree_cap) {
            bool edge_free = true;
            for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v))
                if (inst.adjacency[v].intersects(cand)) {
                    edge_free = false;
                    break;
                }
            if (edge_free) {
                std::vector<int> full = cur;
                for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v))
                    full.push_back(static_cast<int>(v));
                const long long size = static_cast<long long>(full.size());
                if (size > best) {
                    best = size;
                    if (collecting) solutions.clear();
                }
                if (collecting && size == best) {
                    std::sort(full.begin(), full.end());
                    solutions.push_back(std::move(full));
                }
                return;
            }
        }

        // Branch vertex: maximum Kneser degree inside cand, lowest index
        // on ties. Including it shrinks cand the most.
        std::size_t branch = VertexSet::npos;
        int branch_deg = -1;
        for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v)) {
            const int dv = static_cast<int>((inst.adjacency[v] & cand).count());
            if (dv > branch_deg) {
                branch_deg = dv;
                branch = v;
            }
        }

        // Include branch.
        if (degree_cap_allows(static_cast<int>(branch)) &&
            !(cons.fixed_f0 && !(inst.vertices[branch] & element_bit(1)) &&
              count0 >= *cons.fixed_f0)) {
            cur.push_back(static_cast<int>(branch));
            for (Mask m = inst.vertices[branch]; m; m &= m - 1)
                ++degree[static_cast<std::size_t>(first_element(m))];
            const bool avoids1 = !(inst.vertices[branch] & element_bit(1));
            if (avoids1) ++count0;

            std::vector<int> next_live;
            next_live.reserve(live.size());
            for (int t : live)
                if (templates[static_cast<std::size_t>(t)].test(branch)) next_live.push_back(t);

            VertexSet next_cand = cand;
            next_cand -= inst.adjacency[branch];
            next_cand.reset(branch);
            dfs(std::move(next_cand), next_live);

            if (avoids1) --count0;
            for (Mask m = inst.vertices[branch]; m; m &= m - 1)
                --degree[static_cast<std::size_t>(first_element(m))];
            cur.pop_back();
        }

        // Exclude branch.
        cand.reset(branch);
        dfs(std::move(cand), live);
    }
};

// Search specialized to template-style constraints (forbidden copies and
// non-triviality). At a maximum valid family the blocks through any fixed
// element are exactly the star vertices compatible with the rest: adding a
// compatible star vertex keeps the family intersecting, and validity is
// upward-closed. So it suffices to branch over F0, the blocks avoiding
// element 1; the star part is derived, and the objective is
//   |F| = |F0| + |star| - |killed(F0)|
// where killed(F0) are star vertices disjoint from some F0 block. The
// kill sets are shadows of the complements of the F0 blocks, so a
// Kruskal-Katona colex-prefix table lower-bounds |killed| per |F0| and
// prunes hard.
struct StarComplementSearcher {
    const KneserInstance& inst;
    std::vector<VertexSet> templates;
    double timeout_seconds;
    std::chrono::steady_clock::time_point start;

    VertexSet star;                       // vertices through element 1
    long long star_size = 0;
    std::vector<int> order;               // avoid-1 vertices, colex on complements
    std::vector<long long> min_killed;    // KK table: least |killed| per |F0|

    long long best = -1;
    bool collecting = false;
    std::vector<std::vector<int>> solutions;  // vertex lists (F0 part only)
    std::uint64_t nodes = 0;
    bool timed_out = false;

    std::vector<int> cur;

    StarComplementSearcher(const KneserInstance& i, double timeout)
        : inst(i), timeout_seconds(timeout) {
        start = std::chrono::steady_clock::now();
        star = inst.contains[1];
        star_size = static_cast<long long>(star.count());

        // Candidates in colex order of their complements inside [2, n]:
        // that is the shadow-minimizing prefix order.
        const Mask rest = full_mask(inst.n) & ~element_bit(1);
        for (std::size_t v = 0; v < inst.vertex_count(); ++v)
            if (!(inst.vertices[v] & element_bit(1))) order.push_back(static_cast<int>(v));
        auto colex_less = [&](int a, int b) {
            const Mask da = rest & ~inst.vertices[static_cast<std::size_t>(a)];
            const Mask db = rest & ~inst.vertices[static_cast<std::size_t>(b)];
            if (da == db) return false;
            const Mask diff = da ^ db;
            Mask top = diff;
            top |= top >> 1; top |= top >> 2; top |= top >> 4;
            top |= top >> 8; top |= top >> 16; top |= top >> 32;
            top = (top >> 1) + 1;  // highest differing element
            return (db & top) != 0;
        };
        std::sort(order.begin(), order.end(), colex_less);

        // Kills of the colex prefix, which Kruskal-Katona makes the
        // minimum over every family of that size.
        min_killed.assign(order.size() + 1, 0);
        VertexSet killed(inst.vertex_count());
        for (std::size_t i = 0; i < order.size(); ++i) {
            killed |= inst.adjacency[static_cast<std::size_t>(order[i])] & star;
            min_killed[i + 1] = static_cast<long long>(killed.count());
        }
    }

    bool out_of_time() {
        if (timed_out) return true;
        if ((nodes & 0xfff) == 0) {
            const auto now = std::chrono::steady_clock::now();
            if (std::chrono::duration<double>(now - start).count() > timeout_seconds)
                timed_out = true;
        }
        return timed_out;
    }

    int f0_bound(const VertexSet& cand) const {
        VertexSet scratch = cand;
        int total = 0, matched = 0;
        for (auto v = scratch.find_first(); v != VertexSet::npos; v = scratch.find_first()) {
            scratch.reset(v);
            ++total;
            const auto u = (inst.adjacency[v] & scratch).find_first();
            if (u != VertexSet::npos) {
                scratch.reset(u);
                ++total;
                ++matched;
            }
        }
        return total - matched;
    }

    void record_leaf(const VertexSet& killed, const std::vector<int>& live) {
        const VertexSet star_part = star - killed;
        for (int t : live)
            if (star_part.is_subset_of(templates[static_cast<std::size_t>(t)])) return;
        const long long size =
            static_cast<long long>(cur.size()) + star_size - static_cast<long long>(killed.count());
        if (size > best) {
            best = size;
            if (collecting) solutions.clear();
        }
        if (collecting && size == best) solutions.push_back(cur);
    }

    // pos indexes into `order`; cand tracks the still-includable among the
    // remaining, killed the dead star vertices, live the template indices
    // containing every chosen F0 vertex.
    void dfs(std::size_t pos, VertexSet cand, VertexSet killed, const std::vector<int>& live) {
        ++nodes;
        if (out_of_time()) return;

        const long long x = static_cast<long long>(cur.size());
        const long long killed_count = static_cast<long long>(killed.count());
        const long long room = f0_bound(cand);
        long long ub = -1;
        for (long long xf = x; xf <= x + room; ++xf)
            ub = std::max(ub, xf + star_size -
                                  std::max(killed_count,
                                           min_killed[static_cast<std::size_t>(
                                               std::min<long long>(xf, static_cast<long long>(
                                                                           order.size())))]));
        if (collecting ? (ub < best) : (ub <= best)) return;

        // Next branchable candidate at or after pos.
        std::size_t next = pos;
        while (next < order.size() && !cand.test(static_cast<std::size_t>(order[next]))) ++next;
        if (next == order.size()) {
            record_leaf(killed, live);
            return;
        }
        const int v = order[next];

        // Include v.
        {
            cur.push_back(v);
            std::vector<int> next_live;
            next_live.reserve(live.size());
            for (int t : live)
                if (templates[static_cast<std::size_t>(t)].test(static_cast<std::size_t>(v)))
                    next_live.push_back(t);
            VertexSet next_cand = cand;
            next_cand -= inst.adjacency[static_cast<std::size_t>(v)];
            next_cand.reset(static_cast<std::size_t>(v));
            VertexSet next_killed = killed;
            next_killed |= inst.adjacency[static_cast<std::size_t>(v)] & star;
            dfs(next + 1, std::move(next_cand), std::move(next_killed), next_live);
            cur.pop_back();
        }

        // Exclude v.
        cand.reset(static_cast<std::size_t>(v));
        dfs(next + 1, std::move(cand), std::move(killed), live);
    }

    SetFamily family_at(const std::vector<int>& f0) const {
        VertexSet killed(inst.vertex_count());
        std::vector<Mask> blocks;
        for (int v : f0) {
            killed |= inst.adjacency[static_cast<std::size_t>(v)] & star;
            blocks.push_back(inst.vertices[static_cast<std::size_t>(v)]);
        }
        const VertexSet star_part = star - killed;
        for (auto v = star_part.find_first(); v != VertexSet::npos; v = star_part.find_next(v))
            blocks.push_back(inst.vertices[v]);
        return SetFamily(inst.n, std::move(blocks));
    }
};

}  // namespace detail

namespace detail {

inline std::vector<SetFamily> canonical_witness_classes(std::vector<SetFamily> raw,
                                                        int canonical_limit) {
    std::sort(raw.begin(), raw.end(), [](const SetFamily& a, const SetFamily& b) {
        return family_lex_less(a.blocks(), b.blocks());
    });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    std::vector<SetFamily> canon;
    for (const auto& f : raw) {
        auto cf = canonical_form(f, canonical_limit);
        bool fresh = true;
        for (const auto& existing : canon)
            if (existing == cf) {
                fresh = false;
                break;
            }
        if (fresh) canon.push_back(std::move(cf));
    }
    std::sort(canon.begin(), canon.end(), [](const SetFamily& a, const SetFamily& b) {
        return family_lex_less(a.blocks(), b.blocks());
    });
    return canon;
}

}  // namespace detail

inline SearchResult max_family(const KneserInstance& inst, const SearchConstraints& cons,
                               const SearchOptions& opts = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchResult result;

    SearchAlgorithm algo = opts.algorithm;
    if (algo == SearchAlgorithm::Auto)
        algo = (!cons.fixed_f0 && !cons.max_degree_cap) ? SearchAlgorithm::StarComplement
                                                        : SearchAlgorithm::Plain;
    if (algo == SearchAlgorithm::StarComplement && (cons.fixed_f0 || cons.max_degree_cap))
        throw std::invalid_argument(
            "star-complement search handles template constraints only");

    std::vector<SetFamily> raw_witnesses;

    if (algo == SearchAlgorithm::StarComplement) {
        detail::StarComplementSearcher searcher(inst, opts.timeout_seconds);
        searcher.templates =
            detail::template_vertex_sets(inst, cons.forbidden_templates, cons.forbid_trivial);
        std::vector<int> all_live(searcher.templates.size());
        std::iota(all_live.begin(), all_live.end(), 0);

        VertexSet cand(inst.vertex_count());
        for (int v : searcher.order) cand.set(static_cast<std::size_t>(v));
        VertexSet killed(inst.vertex_count());

        searcher.collecting = false;
        searcher.dfs(0, cand, killed, all_live);
        if (opts.all_witnesses && searcher.best >= 0 && !searcher.timed_out) {
            searcher.collecting = true;
            searcher.dfs(0, cand, killed, all_live);
        }
        result.node_count = searcher.nodes;
        result.timed_out = searcher.timed_out;
        result.feasible = searcher.best >= 0;
        result.optimum = searcher.best;
        for (const auto& sol : searcher.solutions) raw_witnesses.push_back(searcher.family_at(sol));
    } else {
        detail::Searcher searcher(inst, cons, opts.timeout_seconds);
        searcher.templates =
            detail::template_vertex_sets(inst, cons.forbidden_templates, cons.forbid_trivial);
        if (inst.vertex_count() > 64) searcher.arc_tables.build(inst);
        std::vector<int> all_live(searcher.templates.size());
        std::iota(all_live.begin(), all_live.end(), 0);

        VertexSet root(inst.vertex_count());
        root.set();

        searcher.collecting = false;
        searcher.dfs(root, all_live);
        if (opts.all_witnesses && searcher.best >= 0 && !searcher.timed_out) {
            searcher.collecting = true;
            searcher.dfs(root, all_live);
        }
        result.node_count = searcher.nodes;
        result.timed_out = searcher.timed_out;
        result.feasible = searcher.best >= 0;
        result.optimum = searcher.best;
        for (const auto& sol : searcher.solutions) raw_witnesses.push_back(inst.family_of(sol));
    }

    if (opts.all_witnesses && result.feasible && !result.timed_out)
        result.witnesses =
            detail::canonical_witness_classes(std::move(raw_witnesses), opts.canonical_limit);

    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

// All maximal intersecting families (independent sets with no addable
// vertex), filtered to the non-trivial ones, up to isomorphism.
inline std::vector<SetFamily> enumerate_maximal(int n, int k, int enumeration_budget = 40,
                                                int canonical_limit = kDefaultCanonicalLimit) {
    const BigInt count = binomial(n, k);
    if (count > enumeration_budget)
        throw FamilyError(FamilyDefect::TooLarge,
                          "enumeration budget exceeded: C(n,k) = " + count.str() + " > " +
                              std::to_string(enumeration_budget));
    KneserInstance inst = build_instance(n, k, enumeration_budget);
    const std::size_t v = inst.vertex_count();

    // Bron-Kerbosch with pivot on the complement (cliques there are
    // exactly the independent sets here).
    std::vector<VertexSet> meet(v);  // complement adjacency, no loops
    for (std::size_t i = 0; i < v; ++i) {
        meet[i] = inst.adjacency[i];
        meet[i].flip();
        meet[i].reset(i);
    }

    std::vector<std::vector<int>> maximal;
    std::vector<int> r;
    std::function<void(VertexSet, VertexSet)> expand = [&](VertexSet p, VertexSet x) {
        if (p.none() && x.none()) {
            maximal.push_back(r);
            return;
        }
        // Pivot: vertex of P | X with most complement-neighbors in P.
        std::size_t pivot = VertexSet::npos;
        std::size_t best_cover = 0;
        VertexSet px = p | x;
        for (auto u = px.find_first(); u != VertexSet::npos; u = px.find_next(u)) {
            const std::size_t cover = (meet[u] & p).count();
            if (pivot == VertexSet::npos || cover > best_cover) {
                pivot = u;
                best_cover = cover;
            }
        }
        VertexSet ext = p;
        if (pivot != VertexSet::npos) ext -= meet[pivot];
        for (auto u = ext.find_first(); u != VertexSet::npos; u = ext.find_next(u)) {
            r.push_back(static_cast<int>(u));
            expand(p & meet[u], x & meet[u]);
            r.pop_back();
            p.reset(u);
            x.set(u);
        }
    };
    VertexSet p0(v), x0(v);
    p0.set();
    expand(p0, x0);

    std::vector<SetFamily> classes;
    for (const auto& sol : maximal) {
        SetFamily fam = inst.family_of(sol);
        if (common_intersection(fam) != 0) continue;  // trivial
        auto cf = canonical_form(fam, canonical_limit);
        bool fresh = true;
        for (const auto& existing : classes)
            if (existing == cf) {
                fresh = false;
                break;
            }
        if (fresh) classes.push_back(std::move(cf));
    }
    std::sort(classes.begin(), classes.end(), [](const SetFamily& a, const SetFamily& b) {
        return detail::family_lex_less(a.blocks(), b.blocks());
    });
    return classes;
}

}  // namespace ekr
