#pragma once

// Certificates over a decomposition: the ten arrow cases of the ordering
// argument, the degree bound they imply, the shadow-complement identity
// for S, the first-miss partition of S with its lower bounds, the
// sunflower stability biconditional, and the level-t certificate chain.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ekr/bigint.hpp"
#include "ekr/canonical.hpp"
#include "ekr/constructions.hpp"
#include "ekr/decomposition.hpp"
#include "ekr/linear_independence.hpp"
#include "ekr/report.hpp"

namespace ekr {

enum class ArrowMode { Auto, Pairwise, Structured };

inline constexpr std::size_t kPairwiseRowCap = 40000;

namespace detail {

struct ArrowRows {
    // Witnesses and condition rows per class, in system row order.
    std::vector<ConditionRow> h, f1, g, s;
};

inline ArrowRows split_rows(const ConditionSystem& sys) {
    ArrowRows out;
    for (const auto& row : sys.rows) {
        switch (row.label.front()) {
            case 'H': out.h.push_back(row); break;
            case 'F': out.f1.push_back(row); break;
            case 'G': out.g.push_back(row); break;
            default: out.s.push_back(row); break;
        }
    }
    return out;
}

inline bool hits_some_condition(const ElementSet& x, const ConditionRow& row) {
    for (const auto& c : row.conditions)
        if (satisfies(x, c)) return true;
    return false;
}

// Scans every ordered pair of one class (or across two classes) for the
// forward-arrow property.
inline void scan_case(VerificationReport& rep, const std::string& name,
                      const std::vector<ConditionRow>& earlier,
                      const std::vector<ConditionRow>& later, bool same_class) {
    bool ok = true;
    for (std::size_t i = 0; i < earlier.size() && ok; ++i) {
        const std::size_t j0 = same_class ? i + 1 : 0;
        for (std::size_t j = j0; j < later.size() && ok; ++j) {
            if (!hits_some_condition(earlier[i].witness, later[j])) {
                ok = false;
                rep.fail(name + ": witness of " + earlier[i].label +
                         " satisfies no condition of " + later[j].label);
            }
        }
    }
    rep.notes.push_back(name + ": " + (ok ? "pass" : "FAIL"));
    if (!ok) rep.passed = false;
}

}  // namespace detail

// The ten arrow cases. In Pairwise mode each case is a direct scan over
// row pairs; the conjunction then coincides with triangular_check on the
// built system. Structured mode verifies the same statements through
// their complete logical equivalents (distinctness, ordering and shape
// scans) and stays near-linear, which keeps six-digit row counts
// tractable. Auto switches on the row count.
inline VerificationReport verify_claim31(const Decomposition& d,
                                         ArrowMode mode = ArrowMode::Auto) {
    ConditionSystem sys = build_condition_system(d);
    VerificationReport rep;
    rep.claim_id = "claim31";
    rep.passed = true;
    rep.numbers["rows"] = static_cast<long long>(sys.rows.size());
    rep.numbers["s"] = sys.s;

    if (mode == ArrowMode::Auto)
        mode = sys.rows.size() <= kPairwiseRowCap ? ArrowMode::Pairwise : ArrowMode::Structured;
    rep.notes.push_back(mode == ArrowMode::Pairwise ? "mode: pairwise" : "mode: structured");

    // Diagonal: no witness satisfies its own conditions. Cheap in both modes.
    for (const auto& row : sys.rows) {
        for (const auto& c : row.conditions) {
            if (satisfies(row.witness, c)) {
                rep.passed = false;
                rep.fail("diagonal: witness of " + row.label + " satisfies own " + c.str());
                break;
            }
        }
    }

    auto rows = detail::split_rows(sys);

    if (mode == ArrowMode::Pairwise) {
        detail::scan_case(rep, "H->H", rows.h, rows.h, true);
        detail::scan_case(rep, "H->F1", rows.h, rows.f1, false);
        detail::scan_case(rep, "H->G", rows.h, rows.g, false);
        detail::scan_case(rep, "H->S", rows.h, rows.s, false);
        detail::scan_case(rep, "F1->F1", rows.f1, rows.f1, true);
        detail::scan_case(rep, "F1->G", rows.f1, rows.g, false);
        detail::scan_case(rep, "F1->S", rows.f1, rows.s, false);
        detail::scan_case(rep, "G->G", rows.g, rows.g, true);
        detail::scan_case(rep, "G->S", rows.g, rows.s, false);
        detail::scan_case(rep, "S->S", rows.s, rows.s, true);
        return rep;
    }

    // Structured mode. Shared shape facts, each verified by full scans:
    //   - H sets: avoid p, sizes <= k-2, strictly increasing (size, lex)
    //   - F1 witnesses: size k-1, avoid p, pairwise distinct; conditions
    //     are the complete beta range over the witness itself
    //   - G sets: contain p, sizes in [1, k-1], strictly increasing
    //   - S sets: size k-1, avoid p, distinct, disjoint from {F - p}
    const Mask pm = element_bit(d.p);
    auto case_note = [&rep](const std::string& name, bool ok, const std::string& why) {
        rep.notes.push_back(name + ": " + (ok ? "pass" : "FAIL"));
        if (!ok) {
            rep.passed = false;
            rep.fail(name + ": " + why);
        }
    };
    auto strictly_increasing = [](const std::vector<ConditionRow>& rows_in) {
        for (std::size_t i = 1; i < rows_in.size(); ++i) {
            const Mask a = rows_in[i - 1].witness.bits, b = rows_in[i].witness.bits;
            if (popcount(a) > popcount(b)) return false;
            if (popcount(a) == popcount(b) && !lex_less(a, b)) return false;
        }
        return true;
    };

    bool h_shape = true;
    for (const auto& r : rows.h)
        h_shape &= (r.witness.bits & pm) == 0 && popcount(r.witness.bits) <= d.k - 2;
    h_shape &= strictly_increasing(rows.h);
    // With n >= 2k the global condition ([n], n-k-1) is unsatisfiable for
    // any H (|H| <= k-2 < n-k-1), so diagonals and cross rows both reduce
    // to the singleton conditions.
    h_shape &= (d.n - d.k - 1) > (d.k - 2);
    case_note("H->H", h_shape, "H sets out of shape or order");

    bool f1_shape = true;
    for (const auto& r : rows.f1) {
        f1_shape &= popcount(r.witness.bits) == d.k - 1 && (r.witness.bits & pm) == 0;
        if (static_cast<int>(r.conditions.size()) != d.k - 1) f1_shape = false;
        for (int beta = 0; beta <= d.k - 2 && f1_shape; ++beta)
            f1_shape &= r.conditions[static_cast<std::size_t>(beta)].p.bits == r.witness.bits &&
                        r.conditions[static_cast<std::size_t>(beta)].beta == beta;
    }
    case_note("H->F1", f1_shape && h_shape,
              "an H set could evade the beta range of an F1 row");

    bool g_shape = true;
    for (const auto& r : rows.g)
        g_shape &= (r.witness.bits & pm) != 0 && popcount(r.witness.bits) >= 1 &&
                   popcount(r.witness.bits) <= d.k - 1;
    g_shape &= strictly_increasing(rows.g);
    case_note("H->G", g_shape && h_shape, "G must contain p while H avoids it");

    bool s_shape = true;
    for (const auto& r : rows.s)
        s_shape &= (r.witness.bits & pm) == 0 && popcount(r.witness.bits) == d.k - 1;
    for (std::size_t i = 1; i < rows.s.size(); ++i)
        s_shape &= rows.s[i - 1].witness.bits != rows.s[i].witness.bits;
    case_note("H->S", s_shape && h_shape, "S sets are larger than every H set");

    // Distinctness of F1 witnesses: blocks through p are distinct, so the
    // p-free parts are distinct as well.
    bool f1_distinct = true;
    {
        std::vector<Mask> ws;
        ws.reserve(rows.f1.size());
        for (const auto& r : rows.f1) ws.push_back(r.witness.bits);
        std::sort(ws.begin(), ws.end());
        f1_distinct = std::adjacent_find(ws.begin(), ws.end()) == ws.end();
    }
    case_note("F1->F1", f1_shape && f1_distinct, "duplicate F1 witnesses");
    case_note("F1->G", f1_shape && g_shape, "G must contain p while F1 witnesses avoid it");

    // S is disjoint from the p-free parts of F1 (the shadow filter).
    bool s_off_shadow = true;
    {
        std::vector<Mask> ws;
        ws.reserve(rows.f1.size());
        for (const auto& r : rows.f1) ws.push_back(r.witness.bits);
        std::sort(ws.begin(), ws.end(), lex_less);
        for (const auto& r : rows.s)
            if (std::binary_search(ws.begin(), ws.end(), r.witness.bits, lex_less)) {
                s_off_shadow = false;
                break;
            }
    }
    case_note("F1->S", s_shape && f1_shape && s_off_shadow,
              "an S set lies in the shadow of F1");
    case_note("G->G", g_shape, "G sets out of shape or order");
    case_note("G->S", g_shape && s_shape, "G through p cannot cover a p-free S set");
    case_note("S->S", s_shape, "duplicate S sets");
    return rep;
}

// Size consequence of the arrows: row count <= basis dimension, |H| = |G|,
// and therefore |F1| <= binomial(n-1, k-1) - |S|, i.e. the maximum degree
// bound with the excess |F| <= binomial(n-1,k-1) - (|S| - |F0|).
inline VerificationReport f1_bound_certificate(const Decomposition& d, bool claim31_passed) {
    VerificationReport rep;
    rep.claim_id = "f1_bound";
    rep.passed = true;
    if (!claim31_passed) {
        rep.passed = false;
        rep.fail("arrow check did not pass; bound not asserted");
        return rep;
    }
    const BigInt f0 = static_cast<long long>(d.f0.size());
    const BigInt f1 = static_cast<long long>(d.f1.size());
    const BigInt s = static_cast<long long>(d.s.size());
    const BigInt hsz = static_cast<long long>(d.h.size());
    const BigInt gsz = static_cast<long long>(d.g.size());

    BigInt low_sets = 0;  // sum of binomial(n-1, i), i <= k-2
    for (int i = 0; i <= d.k - 2; ++i) low_sets += binomial(d.n - 1, i);
    const BigInt basis = monomial_basis_size(d.n, d.k - 1);
    const BigInt star_bound = binomial(d.n - 1, d.k - 1);

    rep.numbers["F0"] = f0;
    rep.numbers["F1"] = f1;
    rep.numbers["S"] = s;
    rep.numbers["H"] = hsz;
    rep.numbers["G"] = gsz;
    rep.numbers["dmax"] = f1;
    rep.numbers["degree_bound"] = star_bound - s;
    rep.numbers["family_bound"] = star_bound - (s - f0);

    if (hsz != low_sets || gsz != low_sets)
        rep.fail("|H| or |G| differs from the low-set count " + low_sets.str());
    if (basis - 2 * low_sets != star_bound)
        rep.fail("basis identity failed: " + basis.str() + " - 2*" + low_sets.str() +
                 " != " + star_bound.str());
    if (hsz + f1 + gsz + s > basis) rep.fail("row count exceeds basis dimension");
    if (f1 > star_bound - s) rep.fail("degree bound violated: |F1| > bound");
    if (f0 + f1 > star_bound - (s - f0)) rep.fail("family bound violated");
    rep.passed = rep.witness_items.empty();
    return rep;
}

// Independent recomputation of S as the union over F0 blocks of all
// (k-1)-sets avoiding that block and p; equality requires maximality.
inline VerificationReport verify_claim32(const Decomposition& d) {
    VerificationReport rep;
    rep.claim_id = "claim32";
    std::vector<Mask> rhs;
    const Mask pm = element_bit(d.p);
    for (Mask b : d.f0.blocks()) {
        const Mask comp = full_mask(d.n) & ~(b | pm);
        for_each_subset_of_size(comp, d.k - 1, [&](Mask m) { rhs.push_back(m); });
    }
    std::sort(rhs.begin(), rhs.end(), lex_less);
    rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());

    rep.numbers["S"] = static_cast<long long>(d.s.size());
    rep.numbers["union"] = static_cast<long long>(rhs.size());
    rep.passed = rhs == d.s.blocks();
    if (!rep.passed) {
        // Symmetric difference witnesses, a handful each way.
        std::vector<Mask> only_s, only_rhs;
        std::set_difference(d.s.blocks().begin(), d.s.blocks().end(), rhs.begin(), rhs.end(),
                            std::back_inserter(only_s), lex_less);
        std::set_difference(rhs.begin(), rhs.end(), d.s.blocks().begin(), d.s.blocks().end(),
                            std::back_inserter(only_rhs), lex_less);
        for (std::size_t i = 0; i < only_s.size() && i < 4; ++i)
            rep.fail("in S, not in union: " + ElementSet(d.n, only_s[i]).str());
        for (std::size_t i = 0; i < only_rhs.size() && i < 4; ++i)
            rep.fail("in union, not in S: " + ElementSet(d.n, only_rhs[i]).str());
        rep.numbers["symmetric_difference"] =
            static_cast<long long>(only_s.size() + only_rhs.size());
    }
    if (!d.maximality_checked)
        rep.notes.push_back("family was decomposed unchecked; equality may legitimately fail");
    return rep;
}

struct CPartition {
    std::vector<SetFamily> cells;  // cell i belongs to block i of F0 (first miss)
};

// Partitions the p-free (k-1)-sets that miss some F0 block by the first
// block they miss, in the stored (lexicographic) F0 order.
inline CPartition compute_c_partition(const Decomposition& d) {
    CPartition part;
    std::vector<std::vector<Mask>> cells(d.f0.size());
    const Mask rest = full_mask(d.n) & ~element_bit(d.p);
    for_each_subset_of_size(rest, d.k - 1, [&](Mask m) {
        for (std::size_t i = 0; i < d.f0.size(); ++i) {
            if ((m & d.f0.block(i)) == 0) {
                cells[i].push_back(m);
                return;
            }
        }
    });
    part.cells.reserve(cells.size());
    for (auto& c : cells) part.cells.emplace_back(d.n, std::move(c));
    return part;
}

// Lower bound on |S|: cells are pairwise disjoint with union S, and cell i
// (i <= k) has at least binomial(n-k-i, k-i) members.
inline VerificationReport verify_claim33(const Decomposition& d) {
    VerificationReport rep;
    rep.claim_id = "claim33";
    rep.passed = true;
    auto part = compute_c_partition(d);

    BigInt cell_total = 0;
    for (std::size_t i = 0; i < part.cells.size(); ++i) {
        const BigInt sz = static_cast<long long>(part.cells[i].size());
        cell_total += sz;
        rep.numbers["C" + std::to_string(i + 1)] = sz;
        const int idx = static_cast<int>(i) + 1;
        if (idx <= std::min(d.x, d.k)) {
            const BigInt lower = binomial(d.n - d.k - idx, d.k - idx);
            if (sz < lower)
                rep.fail("cell " + std::to_string(idx) + " has " + sz.str() +
                         " members, below " + lower.str());
        }
    }
    // Union of cells = S exactly, when S came from a maximality-checked
    // decomposition.
    rep.numbers["cell_total"] = cell_total;
    rep.numbers["S"] = static_cast<long long>(d.s.size());
    if (d.maximality_checked && cell_total != static_cast<long long>(d.s.size()))
        rep.fail("cells do not cover S: " + cell_total.str() + " vs " +
                 std::to_string(d.s.size()));

    const BigInt bound = g_func(d.x, d.n, d.k);
    rep.numbers["sum_bound"] = bound;
    if (BigInt(static_cast<long long>(d.s.size())) < bound)
        rep.fail("|S| = " + std::to_string(d.s.size()) + " below " + bound.str());
    rep.passed = rep.witness_items.empty();
    return rep;
}

// Stability: |S| meets the partial-sum bound with equality iff F0 is a
// sunflower with k-1 common elements; otherwise the bound improves by
// binomial(n-k-3, k-2). The single-block case carries no sunflower
// content; equality alone is asserted there.
inline VerificationReport verify_claim34(const Decomposition& d) {
    VerificationReport rep;
    rep.claim_id = "claim34";
    rep.passed = true;
    const BigInt s = static_cast<long long>(d.s.size());
    const BigInt bound = g_func(d.x, d.n, d.k);
    const bool equality = (s == bound);
    rep.numbers["S"] = s;
    rep.numbers["sum_bound"] = bound;

    if (d.x == 1) {
        rep.notes.push_back("single block in F0: sunflower clause vacuous, equality required");
        if (!equality) rep.fail("|S| != bound for a single-block F0");
        rep.passed = rep.witness_items.empty();
        return rep;
    }

    auto core = sunflower_core(d.f0);
    const bool sunflower_km1 = core.has_value() && core->size() == d.k - 1;
    rep.notes.push_back(std::string("F0 sunflower with k-1 core: ") +
                        (sunflower_km1 ? "yes" : "no"));
    if (core) rep.numbers["core_size"] = core->size();

    if (equality != sunflower_km1) {
        rep.fail(std::string("biconditional violated: equality=") + (equality ? "yes" : "no") +
                 ", sunflower=" + (sunflower_km1 ? "yes" : "no"));
        rep.witness_families.push_back(d.f0);
    }
    if (!sunflower_km1) {
        const BigInt strengthened = bound + binomial(d.n - d.k - 3, d.k - 2);
        rep.numbers["strengthened_bound"] = strengthened;
        if (s < strengthened)
            rep.fail("|S| = " + s.str() + " below strengthened bound " + strengthened.str());
    }
    rep.passed = rep.witness_items.empty();
    return rep;
}

struct LevelTCertificate {
    int t = 0;
    Decomposition decomposition;
    std::vector<VerificationReport> chain;
    VerificationReport summary;
    bool oracle_required = false;
};

// Runs the whole chain on a maximal non-trivial intersecting family that
// avoids every lower-level extremal configuration, then compares against
// the level-t bound. The generic chain suffices when k >= t+2 and
// t <= |F0| <= n-k; outside that window the summary flags that the
// exhaustive oracle is the authority.
inline LevelTCertificate level_t_certificate(const SetFamily& f, int k, int t,
                                             int canonical_limit = kDefaultCanonicalLimit) {
    LevelTCertificate cert;
    cert.t = t;

    // Precondition: not inside any copy of M_{k, t0-1} for t0 = 2..t.
    for (int t0 = 2; t0 <= t; ++t0) {
        const int j = t0 - 1;
        bool embeds;
        if (f.n() <= canonical_limit) {
            embeds = is_subfamily_up_to_iso(f, make_M_kj(f.n(), k, j), canonical_limit);
        } else {
            embeds = embeds_in_mkj_copy(f, k, j);
        }
        if (embeds)
            throw std::domain_error("family embeds in a level-" + std::to_string(t0 - 1) +
                                    " extremal configuration (tail length " + std::to_string(j) +
                                    ")");
    }

    cert.decomposition = decompose(f, k);
    const Decomposition& d = cert.decomposition;

    auto c31 = verify_claim31(d);
    cert.chain.push_back(c31);
    cert.chain.push_back(f1_bound_certificate(d, c31.passed));
    cert.chain.push_back(verify_claim32(d));
    cert.chain.push_back(verify_claim33(d));
    cert.chain.push_back(verify_claim34(d));

    VerificationReport& sum = cert.summary;
    sum.claim_id = "level_t";
    const BoundTable bound = theorem_bound(t, d.n, k);
    const BigInt family_size = static_cast<long long>(f.size());
    sum.numbers["family_size"] = family_size;
    sum.numbers["theorem_bound"] = bound.value;
    sum.numbers["x"] = d.x;
    sum.numbers["p"] = d.p;

    cert.oracle_required = !(k >= t + 2 && t <= d.x && d.x <= d.n - k);
    if (t <= d.n - k) {
        const BigInt generic = binomial(d.n - 1, d.k - 1) - h_func(t, d.n, d.k);
        sum.numbers["generic_chain_bound"] = generic;
    }
    sum.notes.push_back(cert.oracle_required ? "oracle required: generic chain does not close this case"
                                             : "generic chain sufficient");

    bool all = true;
    for (const auto& r : cert.chain) all &= r.passed;
    if (!all) sum.fail("a chained certificate failed");
    if (family_size > bound.value)
        sum.fail("family size " + family_size.str() + " exceeds bound " + bound.value.str());
    sum.passed = all && family_size <= bound.value;
    return cert;
}

}  // namespace ekr
