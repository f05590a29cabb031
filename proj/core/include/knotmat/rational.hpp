#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace knotmat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// (n-1)!! for even n is the number of perfect matchings of n points;
// double_factorial(m) = m * (m-2) * ... down to 1 or 2.
inline Int double_factorial(long long m) {
    Int r = 1;
    for (long long i = m; i > 1; i -= 2) r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Int pow_int(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

std::string to_string(const Rational& q);

// Accepts "p", "-p/q", "p/q". Throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

} // namespace knotmat
