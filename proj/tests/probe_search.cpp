// Scratch performance probe; not part of the suite.
#include <cstdio>

#include "ekr/constructions.hpp"
#include "ekr/search.hpp"

using namespace ekr;

static void run(const char* name, int n, int k, const SearchConstraints& cons,
                bool witnesses = true, double timeout = 600.0) {
    auto inst = build_instance(n, k);
    SearchOptions opts;
    opts.all_witnesses = witnesses;
    opts.timeout_seconds = timeout;
    auto res = max_family(inst, cons, opts);
    std::printf("%-28s opt=%lld witnesses=%zu nodes=%llu time=%.2fs%s\n", name, res.optimum,
                res.witnesses.size(), static_cast<unsigned long long>(res.node_count),
                res.elapsed_seconds, res.timed_out ? " TIMEOUT" : "");
    std::fflush(stdout);
}

int main() {
    SearchConstraints none;
    run("ekr(7,3)", 7, 3, none);

    SearchConstraints nt;
    nt.forbid_trivial = true;
    run("hm(7,3)", 7, 3, nt);

    SearchConstraints l2_73;
    l2_73.forbid_trivial = true;
    l2_73.forbidden_templates = {make_M_i(7, 3, 3), make_M_i(7, 3, 4)};
    run("level2(7,3)", 7, 3, l2_73);

    run("ekr(9,4)", 9, 4, none);
    run("hm(9,4)", 9, 4, nt);

    SearchConstraints l2_94;
    l2_94.forbid_trivial = true;
    l2_94.forbidden_templates = {make_M_i(9, 4, 5)};
    run("level2(9,4)", 9, 4, l2_94);

    SearchConstraints l3_94;
    l3_94.forbid_trivial = true;
    l3_94.forbidden_templates = {make_M_i(9, 4, 5), make_M_kj(9, 4, 2), make_M_i(9, 4, 3),
                                 make_M_i(9, 4, 4)};
    run("level3(9,4)", 9, 4, l3_94);

    SearchConstraints frankl73;
    frankl73.max_degree_cap = static_cast<int>(m_i_maxdeg(7, 3, 3));
    run("frankl(7,3,i=3)", 7, 3, frankl73);

    SearchConstraints frankl94;
    frankl94.max_degree_cap = static_cast<int>(m_i_maxdeg(9, 4, 5));
    run("frankl(9,4,i=5)", 9, 4, frankl94);

    return 0;
}
