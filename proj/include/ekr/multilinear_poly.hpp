#pragma once

// Exact-rational multilinear polynomials in n 0/1-variables, with
// monomials stored as element masks. Includes the reduction x_i^t -> x_i
// (valid on 0/1 inputs) and construction from intersection-condition
// products.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ekr/bigint.hpp"
#include "ekr/element_set.hpp"
#include "ekr/intersection_conditions.hpp"

namespace ekr {

// Monomials ordered graded-lexicographically: lower degree first, ties by
// the element-sequence order. This fixes elimination pivoting downstream.
struct GradedLexLess {
    bool operator()(Mask a, Mask b) const {
        const int da = popcount(a), db = popcount(b);
        if (da != db) return da < db;
        return lex_less(a, b);
    }
};

class MultilinearPoly {
  public:
    using TermMap = std::map<Mask, Rational, GradedLexLess>;

    MultilinearPoly() = default;
    explicit MultilinearPoly(int n) : n_(n) {}

    static MultilinearPoly constant(int n, const Rational& c) {
        MultilinearPoly p(n);
        p.add_term(0, c);
        return p;
    }

    static MultilinearPoly variable(int n, int element) {
        MultilinearPoly p(n);
        p.add_term(element_bit(element), 1);
        return p;
    }

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, popcount(m));
        return d;
    }

    void add_term(Mask monomial, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(monomial, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultilinearPoly& operator+=(const MultilinearPoly& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    MultilinearPoly& scale(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, coeff] : terms_) coeff *= c;
        return *this;
    }

    // Multiplies by (sum of x_b over b in P) - beta, reducing multilinearly
    // as it goes: x_b * monomial collapses to monomial | {b}.
    void multiply_by_linear_form(const ElementSet& p, int beta) {
        TermMap next;
        auto accumulate = [&next](Mask m, const Rational& c) {
            if (c == 0) return;
            auto [it, inserted] = next.emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) next.erase(it);
            }
        };
        for (const auto& [m, c] : terms_) {
            if (beta != 0) accumulate(m, c * Rational(-beta));
            for (Mask bm = p.bits; bm; bm &= bm - 1) accumulate(m | (bm & (~bm + 1)), c);
        }
        terms_ = std::move(next);
    }

    friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

  private:
    int n_ = 0;
    TermMap terms_;
};

// Substitutes the characteristic vector of X: a monomial contributes its
// coefficient iff it lies inside X.
inline Rational evaluate(const MultilinearPoly& f, const ElementSet& x) {
    if (x.n != f.n()) throw std::invalid_argument("evaluate: ground set mismatch");
    Rational total = 0;
    for (const auto& [m, c] : f.terms())
        if ((m & ~x.bits) == 0) total += c;
    return total;
}

// Product of (sum_{b in P} x_b - beta) over the condition list, expanded
// with inline multilinear reduction. Degree is at most |conditions|.
inline MultilinearPoly poly_from_conditions(const std::vector<IntersectionCondition>& conditions,
                                            int n) {
    if (conditions.empty()) throw std::invalid_argument("poly_from_conditions: empty list");
    MultilinearPoly f = MultilinearPoly::constant(n, 1);
    for (const auto& c : conditions) {
        if (c.p.n != n) throw std::invalid_argument("condition ground set mismatch");
        f.multiply_by_linear_form(c.p, c.beta);
    }
    return f;
}

// A raw (not multilinear) polynomial: monomials as explicit exponent
// vectors. Only used as the input side of the reduction.
struct RawPoly {
    int n = 0;
    // exponent vector (size n, index 0 = variable x_1) -> coefficient
    std::map<std::vector<int>, Rational> terms;

    void add_term(const std::vector<int>& exponents, const Rational& coeff) {
        if (static_cast<int>(exponents.size()) != n)
            throw std::invalid_argument("exponent vector size must equal n");
        if (coeff == 0) return;
        auto [it, inserted] = terms.emplace(exponents, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }

    // Evaluation over an arbitrary 0/1 point, for the reduction property.
    Rational evaluate01(Mask point) const {
        Rational total = 0;
        for (const auto& [exps, c] : terms) {
            bool alive = true;
            for (int v = 0; v < n && alive; ++v)
                if (exps[static_cast<std::size_t>(v)] > 0 && !(point & (Mask{1} << v)))
                    alive = false;
            if (alive) total += c;
        }
        return total;
    }
};

// Collapses every exponent >= 2 to 1. Evaluation agrees on all 0/1 points.
inline MultilinearPoly multilinear_reduce(const RawPoly& p) {
    MultilinearPoly out(p.n);
    for (const auto& [exps, c] : p.terms) {
        Mask m = 0;
        for (int v = 0; v < p.n; ++v)
            if (exps[static_cast<std::size_t>(v)] > 0) m |= Mask{1} << v;
        out.add_term(m, c);
    }
    return out;
}

}  // namespace ekr
