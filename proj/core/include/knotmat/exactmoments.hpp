#pragma once

#include <knotmat/npoly.hpp>
#include <knotmat/trace_monomial.hpp>

#include <cstdint>
#include <map>

namespace knotmat {

struct MomentOptions {
    // maximum number of Wick pairings (m-1)!! the brute-force route may touch
    std::uint64_t pairing_budget = 40'000'000;
    // maximum number of distinct states the recursive route may memoize
    std::size_t memo_budget = 1'000'000;
    // worker threads for enumeration; 0 = hardware concurrency
    unsigned threads = 0;
};

// Sum over all fixed-point-free involutions a of N^{loops(g.a)}, g the
// canonical trace permutation. Exact, parallel, deterministic.
NPolynomial wick_moment_bruteforce(const TraceMonomial& spec,
                                   const MomentOptions& opts = {});

// Loop-equation route: split/merge recursion memoized on the sorted trace
// multiset. Identical to brute force everywhere the latter is feasible.
NPolynomial wick_moment_recursive(const TraceMonomial& spec,
                                  const MomentOptions& opts = {});

// Coefficient of N^1, the zero-replica limit of (1/N)<...>.
Rational replica_coefficient(const TraceMonomial& spec,
                             const MomentOptions& opts = {});

// Coefficient of N^order (order >= 2 picks multi-stroke contributions).
Rational link_coefficient(const TraceMonomial& spec, unsigned order,
                          const MomentOptions& opts = {});

// Two-matrix Gaussian with action 1/2 tr(M1^2 + M2^2 - 2c M1 M2), i.e.
// propagators <AA>=<BB>=1/(1-c^2), <AB>=c/(1-c^2). Exact at the given c.
NPolynomial coupled_moment(const TraceMonomial& spec, const Rational& c,
                           const MomentOptions& opts = {});

// loop-count exponent -> number of pairings landing there
std::map<unsigned, Int> diagram_census(const TraceMonomial& spec,
                                       const MomentOptions& opts = {});

} // namespace knotmat
