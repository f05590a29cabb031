#pragma once

#include <knotmat/exactmoments.hpp>
#include <knotmat/multiseries.hpp>
#include <knotmat/npoly.hpp>

#include <map>
#include <vector>

namespace knotmat {

// Truncated expansion of (2^k/chi^2) * prod_i sinh(chi*sigma_i/2) with
// chi = sigma_1 + ... + sigma_k, up to total degree D. Every surviving
// monomial has positive degree in each variable.
MultiSeries replica_generating_series(unsigned k, unsigned D);

// Series coefficient times prod n_i!. Equals replica_coefficient(spec).
Rational replica_moment_from_series(const TraceMonomial& spec);

// Connected count for a product of 4g-2 cubic traces:
// 3^(3g-2) * (6g-4)! * (4g-2)! / (2^(2g) * g! * (3g-2)!).
Rational trivalent_closed_form(unsigned g);

// Same count keyed by the number of cubic traces; zero unless that number
// is 2 mod 4.
Rational trivalent_replica_count(unsigned traces);

// 1/(24^g * g!), the one-marked-point value at genus g.
Rational intersection_number(unsigned g);

// Marked-point index paired with intersection_number(g).
inline unsigned marked_point_index(unsigned g) { return 3 * g - 2; }

// sinh(s^2/2)/(s^2/2) truncated at degree D.
NPolynomial onepoint_series(unsigned D);

// Order-N^2 part of <tr M^(2j)>/(2j)! as a series in s, extracted from the
// exact moment polynomials rather than assumed.
NPolynomial onepoint_orderN_series(unsigned D, const MomentOptions& opts = {});

// Residue expansion of (1/s) * oint e^(su) [log((1+s/2u)/(1-s/2u))]^k / k!
// for k = 1..kmax, truncated at degree D. Reassembles the exact moments:
// <tr M^(2j)> = (2j)! * sum_k N^k [s^(2j)] (term k).
std::map<unsigned, NPolynomial> onepoint_full_expansion(unsigned kmax, unsigned D);

// Sup-norm deviation between the N-scaled one-point series and J1(2t)/t over
// an even grid on [0, tmax].
double bessel_largeN_check(double N, double tmax, unsigned samples);

// Coefficients b_0, b_2, ..., b_(2*nmax) of (1/2)*log(sinh(x/2)/(x/2)).
std::vector<Rational> oneloop_bernoulli_coeffs(unsigned nmax);

// B_n in the convention B_1 = -1/2.
Rational bernoulli_number(unsigned n);

} // namespace knotmat
