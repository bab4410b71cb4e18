#pragma once

// The triangular criterion on condition systems and the resulting size
// certificate: when every row's witness fails its own conditions but hits
// at least one condition of every later row, the associated polynomials
// are linearly independent and the row count is bounded by the monomial
// basis dimension. exact_rank confirms the independence numerically.

#include <string>
#include <vector>

#include "ekr/bigint.hpp"
#include "ekr/exact_rank.hpp"
#include "ekr/intersection_conditions.hpp"
#include "ekr/multilinear_poly.hpp"
#include "ekr/report.hpp"

namespace ekr {

// Checks, by direct scan:
//   (1) for every i:     X_i satisfies no condition in R_i,
//   (2) for every j > i: X_i satisfies at least one condition in R_j.
// Reports the first offending (i, j) pair and condition on failure.
inline VerificationReport triangular_check(const ConditionSystem& sys) {
    VerificationReport rep;
    rep.claim_id = "triangular";
    rep.passed = true;
    rep.numbers["rows"] = static_cast<long long>(sys.rows.size());

    for (std::size_t i = 0; i < sys.rows.size() && rep.passed; ++i) {
        for (const auto& c : sys.rows[i].conditions) {
            if (satisfies(sys.rows[i].witness, c)) {
                rep.fail("row " + std::to_string(i) + " (" + sys.rows[i].label +
                         "): witness satisfies own condition " + c.str());
                rep.numbers["fail_i"] = static_cast<long long>(i);
                break;
            }
        }
    }
    for (std::size_t i = 0; i < sys.rows.size() && rep.passed; ++i) {
        for (std::size_t j = i + 1; j < sys.rows.size() && rep.passed; ++j) {
            bool hit = false;
            for (const auto& c : sys.rows[j].conditions) {
                if (satisfies(sys.rows[i].witness, c)) {
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                rep.fail("witness of row " + std::to_string(i) + " (" + sys.rows[i].label +
                         ") satisfies no condition of row " + std::to_string(j) + " (" +
                         sys.rows[j].label + ")");
                rep.numbers["fail_i"] = static_cast<long long>(i);
                rep.numbers["fail_j"] = static_cast<long long>(j);
            }
        }
    }
    return rep;
}

inline std::vector<MultilinearPoly> system_polynomials(const ConditionSystem& sys) {
    std::vector<MultilinearPoly> polys;
    polys.reserve(sys.rows.size());
    for (const auto& row : sys.rows) polys.push_back(poly_from_conditions(row.conditions, sys.n));
    return polys;
}

// Full certificate: triangular property, the basis-dimension bound on the
// row count, and (size permitting) the exact rank equalling the row count.
inline VerificationReport lemma22_certificate(const ConditionSystem& sys,
                                              int rank_basis_limit = 400) {
    VerificationReport rep;
    rep.claim_id = "lemma22";
    auto tri = triangular_check(sys);
    rep.numbers["rows"] = static_cast<long long>(sys.rows.size());
    rep.numbers["s"] = sys.s;
    const BigInt basis = monomial_basis_size(sys.n, sys.s);
    rep.numbers["basis_dimension"] = basis;

    if (!tri.passed) {
        rep.passed = false;
        rep.notes.push_back("triangular check failed; size bound not asserted");
        for (const auto& w : tri.witness_items) rep.witness_items.push_back(w);
        return rep;
    }
    rep.notes.push_back("triangular check passed");

    const BigInt rows = static_cast<long long>(sys.rows.size());
    const bool bound_ok = rows <= basis;
    rep.notes.push_back("row count <= basis dimension: " + std::string(bound_ok ? "yes" : "no"));
    if (!bound_ok) rep.fail("row count " + rows.str() + " exceeds basis " + basis.str());

    if (basis <= rank_basis_limit) {
        const int rank = exact_rank(system_polynomials(sys));
        rep.numbers["rank"] = rank;
        if (rank != static_cast<int>(sys.rows.size())) {
            rep.fail("rank " + std::to_string(rank) + " != row count " +
                     std::to_string(sys.rows.size()));
        } else {
            rep.notes.push_back("exact rank equals row count");
        }
    } else {
        rep.notes.push_back("rank check skipped: basis dimension above limit " +
                            std::to_string(rank_basis_limit));
    }
    rep.passed = bound_ok && rep.witness_items.empty();
    return rep;
}

}  // namespace ekr
