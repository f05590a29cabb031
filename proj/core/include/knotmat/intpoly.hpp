#pragma once

#include <knotmat/rational.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace knotmat {

// Dense polynomial over arbitrary-precision integers. Coefficients are stored
// ascending; the leading one is never zero, so the zero polynomial is the
// empty list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> ascending);
    explicit IntPolynomial(std::vector<Int> ascending);

    static IntPolynomial monomial(unsigned exponent, const Int& coeff);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coefficient(unsigned exponent) const;
    const std::vector<Int>& coefficients() const { return c_; }

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial operator-() const;
    IntPolynomial& operator*=(const Int& s);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    // Multiply by t^k.
    IntPolynomial shifted(unsigned k) const;

    // t^degree * p(1/t).
    IntPolynomial reversed() const;

    // Quotient when the division is exact; anything else is an error.
    IntPolynomial exact_div(const IntPolynomial& divisor) const;

    Int eval(const Int& x) const;
    Rational eval(const Rational& x) const;

    bool operator==(const IntPolynomial&) const = default;

    std::string str(const char* symbol = "t") const;

private:
    void trim();
    std::vector<Int> c_;
};

} // namespace knotmat
