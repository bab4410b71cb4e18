// Scratch probe: count maximal independent sets in small Kneser graphs.
#include <chrono>
#include <cstdio>
#include <functional>

#include "ekr/kneser.hpp"

using namespace ekr;

static void count_maximal(int n, int k) {
    auto inst = build_instance(n, k);
    const std::size_t v = inst.vertex_count();
    std::vector<VertexSet> meet(v);
    for (std::size_t i = 0; i < v; ++i) {
        meet[i] = inst.adjacency[i];
        meet[i].flip();
        meet[i].reset(i);
    }
    unsigned long long count = 0, calls = 0;
    std::size_t best = 0;
    std::vector<int> r;
    std::function<void(VertexSet, VertexSet)> expand = [&](VertexSet p, VertexSet x) {
        ++calls;
        if (p.none() && x.none()) {
            ++count;
            best = std::max(best, r.size());
            return;
        }
        std::size_t pivot = VertexSet::npos, cover = 0;
        VertexSet px = p | x;
        for (auto u = px.find_first(); u != VertexSet::npos; u = px.find_next(u)) {
            const std::size_t c = (meet[u] & p).count();
            if (pivot == VertexSet::npos || c > cover) {
                pivot = u;
                cover = c;
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
    auto t0 = std::chrono::steady_clock::now();
    VertexSet p0(v), x0(v);
    p0.set();
    expand(p0, x0);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("K(%d,%d): %zu vertices, %llu maximal ISs, max size %zu, %llu calls, %.2fs\n", n,
                k, v, count, best, calls, dt);
    std::fflush(stdout);
}

int main() {
    count_maximal(5, 2);   // Petersen
    count_maximal(7, 3);
    count_maximal(8, 3);
    count_maximal(9, 4);
    count_maximal(10, 4);
    return 0;
}
