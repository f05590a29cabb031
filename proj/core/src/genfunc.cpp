#include <knotmat/genfunc.hpp>

#include <knotmat/errors.hpp>

#include <cmath>
#include <cstdlib>

namespace knotmat {

namespace {

NPolynomial truncated_mul(const NPolynomial& a, const NPolynomial& b, unsigned cap) {
    NPolynomial r;
    for (const auto& [ea, va] : a.coefficients())
        for (const auto& [eb, vb] : b.coefficients()) {
            if (ea + eb > cap) break;
            r.add(ea + eb, va * vb);
        }
    return r;
}

// log((1+y/2)/(1-y/2)) = sum over odd n of 2^(1-n) y^n / n, truncated.
NPolynomial half_log_ratio(unsigned cap) {
    NPolynomial l;
    for (unsigned n = 1; n <= cap; n += 2) {
        Int den = pow_int(2, n - 1) * n;
        l.set(n, Rational(Int(1), den));
    }
    return l;
}

} // namespace

MultiSeries replica_generating_series(unsigned k, unsigned D) {
    const unsigned cap = D + 2;
    MultiSeries chi(k, cap);
    {
        MultiSeries::Key e(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            e[i] = 1;
            chi.add(e, 1);
            e[i] = 0;
        }
    }
    std::vector<MultiSeries> chi_pow;
    chi_pow.emplace_back(k, cap);
    chi_pow.back().add(MultiSeries::Key(k, 0), 1);
    for (unsigned j = 1; 2 * j <= cap; ++j) chi_pow.push_back(chi_pow.back() * chi);

    MultiSeries product(k, cap);
    product.add(MultiSeries::Key(k, 0), Rational(pow_int(2, k)));
    for (unsigned i = 0; i < k; ++i) {
        // sinh(chi*sigma_i/2) = sum over odd j of (sigma_i/2)^j chi^j / j!
        MultiSeries factor(k, cap);
        MultiSeries::Key e(k, 0);
        for (unsigned j = 1; 2 * j <= cap; j += 2) {
            e[i] = j;
            MultiSeries term = chi_pow[j].shifted(e);
            Int den = pow_int(2, j) * factorial(j);
            term *= Rational(Int(1), den);
            factor += term;
        }
        product = product * factor;
    }
    return product.divided_by_chi_squared();
}

Rational replica_moment_from_series(const TraceMonomial& spec) {
    if (!spec.single_matrix())
        throw Unsupported("replica_moment_from_series requires a single-matrix monomial");
    auto sizes = spec.trace_sizes();
    const unsigned k = static_cast<unsigned>(sizes.size());
    const unsigned D = static_cast<unsigned>(spec.total_legs());
    auto series = replica_generating_series(k, D);
    MultiSeries::Key key(sizes.begin(), sizes.end());
    Rational scale = 1;
    for (int n : sizes) scale *= Rational(factorial(static_cast<unsigned>(n)));
    return series.coefficient(key) * scale;
}

Rational trivalent_closed_form(unsigned g) {
    Int num = pow_int(3, 3 * g - 2) * factorial(6 * g - 4) * factorial(4 * g - 2);
    Int den = pow_int(2, 2 * g) * factorial(g) * factorial(3 * g - 2);
    return Rational(num, den);
}

Rational trivalent_replica_count(unsigned traces) {
    if (traces % 4 != 2) return 0;
    return trivalent_closed_form((traces + 2) / 4);
}

Rational intersection_number(unsigned g) {
    Int den = pow_int(24, g) * factorial(g);
    return Rational(Int(1), den);
}

NPolynomial onepoint_series(unsigned D) {
    NPolynomial u;
    for (unsigned m = 0; 4 * m <= D; ++m) {
        Int den = pow_int(2, 2 * m) * factorial(2 * m + 1);
        u.set(4 * m, Rational(Int(1), den));
    }
    return u;
}

NPolynomial onepoint_orderN_series(unsigned D, const MomentOptions& opts) {
    NPolynomial u;
    for (unsigned j = 1; 2 * j <= D; ++j) {
        Rational c = link_coefficient(TraceMonomial::from_powers({static_cast<int>(2 * j)}), 2, opts);
        u.set(2 * j, c / Rational(factorial(2 * j)));
    }
    return u;
}

std::map<unsigned, NPolynomial> onepoint_full_expansion(unsigned kmax, unsigned D) {
    const unsigned pmax = D / 2 + 1;
    NPolynomial base = half_log_ratio(pmax);
    std::map<unsigned, NPolynomial> out;
    NPolynomial bracket(Rational(1));
    for (unsigned k = 1; k <= kmax; ++k) {
        bracket = truncated_mul(bracket, base, pmax);
        // residue picks u^(p-1) out of e^(su), pairing y^p with s^(2p-2)
        NPolynomial t;
        for (const auto& [p, b] : bracket.coefficients()) {
            if (p < 1 || 2 * p - 2 > D) continue;
            Int den = factorial(p - 1) * factorial(k);
            t.set(2 * p - 2, b / Rational(den));
        }
        out.emplace(k, std::move(t));
    }
    return out;
}

double bessel_largeN_check(double N, double tmax, unsigned samples) {
    const unsigned kmax = 24, D = 48;
    auto expansion = onepoint_full_expansion(kmax, D);
    double worst = 0;
    for (unsigned s = 0; s <= samples; ++s) {
        double t = tmax * s / samples;
        double u = 0;
        for (const auto& [k, series] : expansion) {
            double weight = std::pow(N, static_cast<double>(k) - 1);
            for (const auto& [e, v] : series.coefficients()) {
                // sigma^2 -> -t^2/N
                unsigned half = e / 2;
                double sign = half % 2 ? -1.0 : 1.0;
                u += weight * v.convert_to<double>() * sign * std::pow(t * t / N, half);
            }
        }
        double target = t == 0 ? 1.0 : std::cyl_bessel_j(1, 2 * t) / t;
        worst = std::max(worst, std::abs(u - target));
    }
    return worst;
}

std::vector<Rational> oneloop_bernoulli_coeffs(unsigned nmax) {
    const unsigned cap = 2 * nmax;
    // sinh(y)/y - 1 with y = x/2, as a series in x
    NPolynomial s;
    for (unsigned m = 1; 2 * m <= cap; ++m) {
        Int den = factorial(2 * m + 1) * pow_int(2, 2 * m);
        s.set(2 * m, Rational(Int(1), den));
    }
    NPolynomial log_series, power(Rational(1));
    for (unsigned m = 1; 2 * m <= cap; ++m) {
        power = truncated_mul(power, s, cap);
        log_series += power * Rational(m % 2 ? 1 : -1, m);
    }
    std::vector<Rational> out(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n) out[n] = log_series.coefficient(2 * n) / 2;
    return out;
}

Rational bernoulli_number(unsigned n) {
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
        b[m] = -acc / Rational(m + 1);
    }
    return b[n];
}

} // namespace knotmat
