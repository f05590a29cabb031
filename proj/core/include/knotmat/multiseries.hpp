#pragma once

#include <knotmat/rational.hpp>

#include <map>
#include <vector>

namespace knotmat {

// Truncated power series in sigma_1..sigma_k with exact rational coefficients.
// Terms above the truncation degree are dropped on insertion; zero
// coefficients are never stored.
class MultiSeries {
public:
    using Key = std::vector<unsigned>;

    MultiSeries(unsigned vars, unsigned max_degree) : vars_(vars), cap_(max_degree) {}

    unsigned vars() const { return vars_; }
    unsigned max_degree() const { return cap_; }

    static unsigned total_degree(const Key& exponents);

    Rational coefficient(const Key& exponents) const;
    void add(const Key& exponents, const Rational& value);

    MultiSeries& operator+=(const MultiSeries& o);
    MultiSeries& operator*=(const Rational& s);
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);

    // Multiply by the monomial with the given exponents.
    MultiSeries shifted(const Key& exponents) const;

    // Exact division by (sigma_1 + ... + sigma_k)^2. The truncation degree
    // drops by two; a nonzero remainder is an error.
    MultiSeries divided_by_chi_squared() const;

    const std::map<Key, Rational>& terms() const { return terms_; }

private:
    unsigned vars_;
    unsigned cap_;
    std::map<Key, Rational> terms_;
};

} // namespace knotmat
