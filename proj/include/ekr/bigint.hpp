#pragma once

// Exact integer and rational arithmetic used throughout the library.
// All set-family counts are arbitrary precision: binomial(n-1, k-1) leaves
// 64 bits quickly once sweeps push n past ~60.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ekr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// binomial(a, b) with the zero convention: 0 whenever b < 0 or a < b.
// The bound formulas rely on this (e.g. terms like binomial(n-k-3, k-1)
// vanishing at small n).
inline BigInt binomial(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    BigInt result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= (a - b + i);
        result /= i;  // exact at every step
    }
    return result;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// Parses a decimal string back into a BigInt (report round-trips).
inline BigInt bigint_from_string(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a valid integer: " + s);
    }
}

}  // namespace ekr
