#pragma once

// Exact rank of a set of multilinear polynomials over the rationals.
// Rows are the polynomials, columns the graded-lex monomial basis of the
// degrees that actually occur. Denominators are cleared per row and the
// elimination is fraction-free (Bareiss), so every intermediate value is
// an exact integer.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ekr/bigint.hpp"
#include "ekr/multilinear_poly.hpp"

namespace ekr {

namespace detail {

inline int bareiss_rank(std::vector<std::vector<BigInt>>& m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    BigInt prev_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        // Deterministic pivot: first nonzero entry in this column.
        std::size_t pivot_row = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (m[r][col] != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row == rows) continue;
        std::swap(m[rank], m[pivot_row]);
        const BigInt pivot = m[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (pivot * m[r][c] - m[r][col] * m[rank][c]) / prev_pivot;
            m[r][col] = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace detail

// Number of monomials of degree <= s in n variables (the basis dimension
// that bounds any rank here).
inline BigInt monomial_basis_size(int n, int s) {
    BigInt total = 0;
    for (int h = 0; h <= s; ++h) total += binomial(n, h);
    return total;
}

inline int exact_rank(const std::vector<MultilinearPoly>& polys) {
    if (polys.empty()) return 0;
    // Collect the monomials that occur, in graded-lex column order.
    std::set<Mask, GradedLexLess> monomials;
    for (const auto& f : polys)
        for (const auto& [m, c] : f.terms()) monomials.insert(m);
    std::map<Mask, std::size_t, GradedLexLess> col_of;
    std::size_t idx = 0;
    for (Mask m : monomials) col_of[m] = idx++;

    std::vector<std::vector<BigInt>> matrix(polys.size(),
                                            std::vector<BigInt>(monomials.size(), BigInt(0)));
    for (std::size_t r = 0; r < polys.size(); ++r) {
        // Clear denominators row-wise; scaling a row never changes rank.
        BigInt lcm = 1;
        for (const auto& [m, c] : polys[r].terms()) {
            const BigInt den = boost::multiprecision::denominator(c);
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        for (const auto& [m, c] : polys[r].terms()) {
            const Rational scaled = c * Rational(lcm);
            matrix[r][col_of[m]] = boost::multiprecision::numerator(scaled);
        }
    }
    return detail::bareiss_rank(matrix);
}

}  // namespace ekr
