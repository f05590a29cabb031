#pragma once

#include <knotmat/rational.hpp>

#include <map>
#include <string>

namespace knotmat {

// Exact polynomial in the matrix dimension N. Zero coefficients are never
// stored, so the default-constructed value is the zero polynomial.
class NPolynomial {
public:
    NPolynomial() = default;
    explicit NPolynomial(const Rational& constant) { set(0, constant); }

    static NPolynomial monomial(unsigned exponent, const Rational& coeff) {
        NPolynomial p;
        p.set(exponent, coeff);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    unsigned degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    Rational coefficient(unsigned exponent) const {
        auto it = c_.find(exponent);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void set(unsigned exponent, const Rational& value) {
        if (value == 0)
            c_.erase(exponent);
        else
            c_[exponent] = value;
    }

    void add(unsigned exponent, const Rational& value) {
        auto it = c_.find(exponent);
        if (it == c_.end()) {
            if (value != 0) c_.emplace(exponent, value);
            return;
        }
        it->second += value;
        if (it->second == 0) c_.erase(it);
    }

    NPolynomial& operator+=(const NPolynomial& o) {
        for (const auto& [e, v] : o.c_) add(e, v);
        return *this;
    }

    friend NPolynomial operator+(NPolynomial a, const NPolynomial& b) {
        a += b;
        return a;
    }

    NPolynomial& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& [e, v] : c_) v *= s;
        return *this;
    }

    friend NPolynomial operator*(NPolynomial a, const Rational& s) {
        a *= s;
        return a;
    }

    friend NPolynomial operator*(const NPolynomial& a, const NPolynomial& b) {
        NPolynomial r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add(ea + eb, va * vb);
        return r;
    }

    // Multiply by N^k.
    NPolynomial shifted(unsigned k) const {
        NPolynomial r;
        for (const auto& [e, v] : c_) r.c_.emplace(e + k, v);
        return r;
    }

    Rational eval(const Rational& n) const {
        Rational r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r += it->second * pow_rational(n, it->first);
        return r;
    }

    bool operator==(const NPolynomial&) const = default;

    const std::map<unsigned, Rational>& coefficients() const { return c_; }

    std::string str(const char* symbol = "N") const;

private:
    std::map<unsigned, Rational> c_;
};

} // namespace knotmat
