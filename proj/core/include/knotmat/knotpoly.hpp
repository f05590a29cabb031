#pragma once

#include <knotmat/intpoly.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace knotmat {

// Sparse Laurent polynomial over arbitrary-precision integers. The same type
// carries the bracket variable A, the Jones variable t and the skein variable
// z; Jones exponents live on a doubled lattice so that half-integer powers of
// t (which links need) stay integral: stored exponent k means t^(k/2).
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<int, long long>> terms);

    static LaurentPoly monomial(int exponent, Int coeff = 1);

    bool is_zero() const { return c_.empty(); }
    const std::map<int, Int>& terms() const { return c_; }
    Int coeff(int exponent) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    // Substitutes the variable by its inverse (exponent negation).
    LaurentPoly mirrored() const;

    bool operator==(const LaurentPoly&) const = default;

private:
    void prune(int exponent);

    std::map<int, Int> c_;
};

// Renders with exponents descending; `half = 2` prints the doubled-lattice
// convention (k -> var^(k/2)), `half = 1` prints exponents as stored.
std::string to_string(const LaurentPoly& p, const std::string& var, int half = 1);

// One crossing in planar-diagram form: four arc labels counterclockwise
// starting from the incoming under-strand, plus the crossing sign.
struct Crossing {
    std::array<unsigned, 4> arcs{};
    int sign = 0;

    bool operator==(const Crossing&) const = default;
};

class PlanarDiagram {
public:
    PlanarDiagram() = default;
    explicit PlanarDiagram(std::vector<Crossing> crossings, unsigned free_loops = 0);

    static PlanarDiagram unknot() { return PlanarDiagram({}, 1); }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    unsigned free_loops() const { return free_loops_; }

    // (a,b,c,d) -> (b,c,d,a) with the sign negated; the closure of the
    // reflected diagram.
    PlanarDiagram mirrored() const;

private:
    std::vector<Crossing> crossings_;
    unsigned free_loops_ = 0;
};

// Builds a diagram from bare 4-tuples, reading each sign off the arc
// numbering: the over-strand runs b -> d when d = b + 1 modulo the arc count
// (sign -1) and d -> b when b = d + 1 (sign +1).
PlanarDiagram pd_from_tuples(const std::vector<std::array<unsigned, 4>>& tuples);

// {"crossings": [[a,b,c,d], ...], "signs": [...], "free_loops": n}; signs are
// optional and default to the arc-numbering rule above.
PlanarDiagram pd_from_json(const std::string& text);

// Trace closure of a braid word (letter g = generator |g| joining strands
// |g| and |g|+1, positive = left strand over). Strands the word never
// touches close into free loops; `strands = 0` infers the width.
PlanarDiagram braid_closure(const std::vector<int>& word, unsigned strands = 0);

struct BracketOptions {
    unsigned crossing_cap = 16;
    // worker threads for the state sum; 0 = hardware concurrency
    unsigned threads = 0;
};

// Kauffman state sum in A over all 2^c smoothings, with <unknot> = 1. The
// A-smoothing of (a,b,c,d) joins a-b and c-d, the B-smoothing a-d and b-c.
LaurentPoly kauffman_bracket(const PlanarDiagram& d, const BracketOptions& opts = {});

// Sum of crossing signs.
int writhe(const PlanarDiagram& d);

// (-A)^(-3w) <d> with t = A^(-4), on the doubled t-lattice.
LaurentPoly jones_polynomial(const PlanarDiagram& d, const BracketOptions& opts = {});

struct SkeinResult {
    bool ok = false;
    LaurentPoly residual; // t^(-1) V(L+) - t V(L-) - (sqrt(t) - 1/sqrt(t)) V(L0)
};

// Exact check of the Jones skein relation on a crossing-switch triple.
SkeinResult skein_check(const PlanarDiagram& plus, const PlanarDiagram& minus,
                        const PlanarDiagram& zero, const BracketOptions& opts = {});

// Taylor coefficients v_0..v_jmax of V(e^x) about x = 0.
std::vector<Rational> vassiliev_coefficients(const LaurentPoly& jones, unsigned jmax);

// Unique P(z) with P(sqrt(t) - 1/sqrt(t)) = ±t^(-deg/2) delta(t), the sign
// chosen so the value at t = 1 is +1. Requires an even-degree palindrome
// with delta(1) = ±1.
IntPolynomial conway_from_alexander(const IntPolynomial& delta);

} // namespace knotmat
