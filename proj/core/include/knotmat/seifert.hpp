#pragma once

#include <knotmat/intpoly.hpp>

#include <initializer_list>
#include <map>
#include <vector>

namespace knotmat {

class SeifertMatrix {
public:
    SeifertMatrix() = default;
    explicit SeifertMatrix(std::size_t n) : n_(n), a_(n * n) {}
    SeifertMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t size() const { return n_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    SeifertMatrix transposed() const;

    bool operator==(const SeifertMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Int> a_;
};

// 2g x 2g upper-bidiagonal matrix with diagonal (1, 2, ..., 2, 1) and unit
// superdiagonal.
SeifertMatrix trivalent_family(unsigned g);

// det(t V - V^T), fraction-free elimination over integer polynomials.
IntPolynomial alexander_polynomial(const SeifertMatrix& V);

// Same polynomial as alexander_polynomial(trivalent_family(g)) via the
// tridiagonal determinant recursion; O(g) polynomial multiplications.
IntPolynomial alexander_trivalent_recursive(unsigned g);

// sum_(j=0..n-1) (-1)^j t^j, the (2,n) torus value; n must be odd.
IntPolynomial torus_2n_alexander(int n);

// Strip the content power of t and fix the sign so the constant term is
// positive.
IntPolynomial normalize(const IntPolynomial& delta);

// Rewrite a Laurent polynomial in s (exponent -> coefficient) as a polynomial
// in z = s - 1/s. Throws NonSymmetrizable when no such rewrite exists.
IntPolynomial laurent_in_z(const std::map<int, Int>& laurent);

// det(s V - s^(-1) V^T) written in z = s - 1/s; the 0x0 matrix gives 1.
IntPolynomial conway_polynomial(const SeifertMatrix& V);

} // namespace knotmat
