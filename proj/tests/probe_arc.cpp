// Scratch probe: arc-bound cost and tightness on K(9,4) subsets.
#include <chrono>
#include <cstdio>
#include <random>

#include "ekr/search.hpp"

using namespace ekr;

int main() {
    auto inst = build_instance(9, 4);
    detail::ArcTables tables;
    auto t0 = std::chrono::steady_clock::now();
    tables.build(inst);
    std::printf("build: %.3fs, orders=%zu\n",
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(),
                tables.order_count);

    VertexSet all(inst.vertex_count());
    all.set();
    t0 = std::chrono::steady_clock::now();
    long long b = 0;
    for (int i = 0; i < 100; ++i) b = tables.bound(all);
    double per = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / 100;
    std::printf("root bound = %lld (exact alpha = 56), eval = %.3f ms\n", b, per * 1e3);

    // Random subsets at several densities.
    std::mt19937 rng(7);
    for (double density : {0.9, 0.7, 0.5, 0.3}) {
        long long sum_arc = 0, sum_match = 0;
        for (int trial = 0; trial < 20; ++trial) {
            VertexSet cand(inst.vertex_count());
            for (std::size_t v = 0; v < inst.vertex_count(); ++v)
                if (std::uniform_real_distribution<>(0, 1)(rng) < density) cand.set(v);
            sum_arc += tables.bound(cand);
            // matching bound
            VertexSet scratch = cand;
            int total = 0, matched = 0;
            for (auto v = scratch.find_first(); v != VertexSet::npos; v = scratch.find_first()) {
                scratch.reset(v);
                ++total;
                auto u = (inst.adjacency[v] & scratch).find_first();
                if (u != VertexSet::npos) {
                    scratch.reset(u);
                    ++total;
                    ++matched;
                }
            }
            sum_match += total - matched;
        }
        std::printf("density %.1f: avg arc bound %.1f, avg matching bound %.1f\n", density,
                    sum_arc / 20.0, sum_match / 20.0);
    }

    // Substar candidate sets (the regime where matching is weakest).
    VertexSet star = inst.contains[1];
    std::printf("star(1): arc=%lld match=%d size=%zu\n", tables.bound(star),
                (int)star.count(), star.count());
    return 0;
}
