#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qk {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. cpp_rational keeps the fraction in lowest terms
/// with a positive denominator, which is exactly the invariant we need.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_pow(const Rational& b, int e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (b == 0) throw std::domain_error("rational_pow: zero base, negative exponent");
        return Rational(1) / rational_pow(b, -e);
    }
    Rational acc(1), base(b);
    int n = e;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline Rational factorial(int n) {
    Integer acc(1);
    for (int i = 2; i <= n; ++i) acc *= i;
    return Rational(acc);
}

/// Generalized binomial coefficient C(t, j) for integer t (possibly
/// negative), j >= 0.
inline Rational binomial(long long t, int j) {
    if (j < 0) return Rational(0);
    Rational acc(1);
    for (int i = 0; i < j; ++i) {
        acc *= Rational(Integer(t - i));
        acc /= Rational(Integer(i + 1));
    }
    return acc;
}

} // namespace qk
