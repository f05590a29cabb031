#include <knotmat/intpoly.hpp>

#include <knotmat/errors.hpp>

#include <algorithm>

namespace knotmat {

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending) {
    c_.assign(ascending.begin(), ascending.end());
    trim();
}

IntPolynomial::IntPolynomial(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::monomial(unsigned exponent, const Int& coeff) {
    IntPolynomial p;
    if (coeff != 0) {
        p.c_.assign(exponent + 1, Int(0));
        p.c_[exponent] = coeff;
    }
    return p;
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPolynomial::coefficient(unsigned exponent) const {
    return exponent < c_.size() ? c_[exponent] : Int(0);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPolynomial& IntPolynomial::operator*=(const Int& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPolynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

IntPolynomial IntPolynomial::shifted(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    IntPolynomial r;
    r.c_.assign(c_.size() + k, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

IntPolynomial IntPolynomial::reversed() const {
    IntPolynomial r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    if (is_zero()) return {};
    if (c_.size() < divisor.c_.size()) throw Error("polynomial division is not exact");
    std::vector<Int> rem = c_;
    std::vector<Int> quot(c_.size() - divisor.c_.size() + 1, Int(0));
    const Int& lead = divisor.c_.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
        Int top = rem[i + divisor.c_.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw Error("polynomial division is not exact");
        Int q = top / lead;
        quot[i] = q;
        for (std::size_t j = 0; j < divisor.c_.size(); ++j) rem[i + j] -= q * divisor.c_[j];
    }
    for (const Int& v : rem)
        if (v != 0) throw Error("polynomial division is not exact");
    return IntPolynomial(std::move(quot));
}

Int IntPolynomial::eval(const Int& x) const {
    Int r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Rational IntPolynomial::eval(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Rational(c_[i]);
    return r;
}

std::string IntPolynomial::str(const char* symbol) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Int& v = c_[i];
        if (v == 0) continue;
        if (!out.empty()) out += v > 0 ? " + " : " - ";
        else if (v < 0) out += "-";
        Int a = abs(v);
        if (a != 1 || i == 0) out += a.str();
        if (i > 0) {
            if (a != 1) out += "*";
            out += symbol;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace knotmat
