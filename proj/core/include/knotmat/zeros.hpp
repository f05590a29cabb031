#pragma once

#include <knotmat/intpoly.hpp>

#include <complex>
#include <cstddef>
#include <vector>

namespace knotmat {

struct Root {
    std::complex<double> value;
    double residual = 0;
};

struct RootSet {
    std::vector<Root> roots;
    unsigned degree = 0;
};

struct RootFindOptions {
    // Starting significant digits; escalates by doubling through 240.
    unsigned precision = 60;
    unsigned max_iterations = 600;
    double residual_tol = 1e-12;
    // Optional warm start; missing guesses are filled from a fixed circle.
    std::vector<std::complex<double>> initial_guesses;
};

// All complex zeros by simultaneous iteration. Zeros at the origin are
// stripped first; the reported degree is the stripped degree. Deterministic
// for fixed options. Throws NoConvergence when the highest precision level
// still fails, Unsupported for precision above 240 digits.
RootSet find_roots(const IntPolynomial& p, const RootFindOptions& opts = {});

struct CircleReport {
    double max_deviation = 0;
    std::size_t off_count = 0;
};

// Per-set deviation of |root| from 1; off_count counts roots beyond tol.
CircleReport unit_circle_report(const RootSet& set, double tol = 1e-10);

struct ArcBounds {
    double min_re = 0;
    double max_re = 0;
    double min_abs_arg = 0;
    double max_abs_arg = 0;
};

// Locus bounds; every root must sit on the unit circle within tol, anything
// else throws OffCircle.
ArcBounds arc_bounds(const RootSet& set, double tol = 1e-8);

struct AngularHistogram {
    std::vector<std::size_t> counts;
    double max_angle = 0; // right edge of the last bin

    double bin_width() const {
        return counts.empty() ? 0.0 : max_angle / static_cast<double>(counts.size());
    }
};

// Histogram of |arg| pooled over the given sets, range [0, max observed],
// right edge inclusive.
AngularHistogram angular_density(const std::vector<RootSet>& sets, unsigned bins = 64);

struct EdgeFitOptions {
    unsigned bins = 64;
    // Nonempty bins dropped next to the edge before fitting.
    unsigned skip_bins = 2;
    // Fit window size in log10 of the distance to the edge.
    double decades = 1.0;
};

struct EdgeFit {
    double exponent = 0;
    double fit_residual = 0; // rms residual of the log-log fit
    unsigned points = 0;
};

// Least-squares slope of log(bin count) against log(edge distance). Needs at
// least 200 pooled roots and 4 usable bins, otherwise InsufficientData.
EdgeFit edge_exponent(const std::vector<RootSet>& sets, const EdgeFitOptions& opts = {});

// Root sets of the bidiagonal-family polynomials for g = 1..gmax; each size
// is warm started from the previous one.
std::vector<RootSet> trivalent_zero_sweep(unsigned gmax, const RootFindOptions& base = {});

} // namespace knotmat
