#include <knotmat/zeros.hpp>

#include <knotmat/errors.hpp>
#include <knotmat/seifert.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <type_traits>

namespace knotmat {

namespace {

template <unsigned D>
using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<D>,
                                               boost::multiprecision::et_off>;
template <unsigned D>
using BigComplex = boost::multiprecision::cpp_complex<D>;

template <class F>
double approx(const F& v) {
    if constexpr (std::is_same_v<F, double>)
        return v;
    else
        return v.template convert_to<double>();
}

template <class C>
std::complex<double> approx_c(const C& z) {
    if constexpr (std::is_same_v<C, std::complex<double>>)
        return z;
    else
        return {z.real().template convert_to<double>(), z.imag().template convert_to<double>()};
}

template <class C, class F>
void eval_with_derivative(const std::vector<F>& c, const C& z, C& p, C& dp) {
    p = C(c.back());
    dp = C(0);
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
}

// Simultaneous iteration with per-root freezing. A root stops once its
// correction is small against the distance to its nearest neighbour and
// either the correction tolerance holds or the evaluated value fell below
// the Horner rounding bound, meaning no further progress is possible at
// this precision. The neighbour sums only steer the iteration, so they are
// accumulated in double from snapshots of the current iterates. Returns the
// number of frozen roots.
template <class F, class C>
std::size_t aberth_pass(const std::vector<F>& c, std::vector<C>& z, unsigned max_iter,
                        const F& tol) {
    using std::abs;
    const std::size_t n = z.size();
    if (n == 0) return 0;

    const double eps = approx(std::numeric_limits<F>::epsilon());
    const double tol_d = approx(tol);
    constexpr double separation = 1e-3;

    std::vector<double> absc(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) absc[k] = std::abs(approx(c[k]));

    std::vector<std::complex<double>> zd(n);
    for (std::size_t i = 0; i < n; ++i) zd[i] = approx_c(z[i]);
    std::vector<char> done(n, 0);
    const C nudge(F(1) / F(997), F(1) / F(499));

    unsigned it = 0;
    bool all = false;
    for (; it < max_iter && !all; ++it) {
        all = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;

            std::complex<double> sum = 0;
            double mind = std::numeric_limits<double>::infinity();
            bool collided = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                std::complex<double> d = zd[i] - zd[j];
                if (std::abs(d) == 0) {
                    d = approx_c(C(z[i] - z[j]));
                    if (std::abs(d) == 0) {
                        collided = true;
                        break;
                    }
                }
                sum += 1.0 / d;
                mind = std::min(mind, std::abs(d));
            }
            if (collided) {
                z[i] += nudge;
                zd[i] = approx_c(z[i]);
                all = false;
                continue;
            }

            C p, dp;
            eval_with_derivative(c, z[i], p, dp);
            if (dp == C(0)) {
                z[i] += nudge;
                zd[i] = approx_c(z[i]);
                all = false;
                continue;
            }

            const double az = std::abs(zd[i]);
            double s = absc.back();
            for (std::size_t k = absc.size() - 1; k-- > 0;) s = s * az + absc[k];
            const double floor_bound = eps * (2.0 * static_cast<double>(n) + 1.0) * s;

            C ratio = p / dp;
            C denom = C(1) - ratio * C(F(sum.real()), F(sum.imag()));
            if (denom == C(0)) {
                z[i] += nudge;
                zd[i] = approx_c(z[i]);
                all = false;
                continue;
            }
            C w = ratio / denom;
            const double aw = approx(F(abs(w)));

            if (approx(F(abs(p))) <= floor_bound && aw <= separation * mind) {
                done[i] = 1;
                continue;
            }
            z[i] -= w;
            zd[i] = approx_c(z[i]);
            if (aw <= tol_d * (1.0 + az) && aw <= separation * mind) {
                done[i] = 1;
                continue;
            }
            all = false;
        }
    }
    return static_cast<std::size_t>(std::count(done.begin(), done.end(), char(1)));
}

// |p(z)| at working precision, floored by the Horner rounding bound so the
// reported residual never understates the evaluation error.
template <class F, class C>
double certified_residual(const std::vector<F>& c, const std::vector<double>& absc, const C& z) {
    using std::abs;
    C p(c.back());
    for (std::size_t k = c.size() - 1; k-- > 0;) p = p * z + c[k];
    const double az = std::abs(approx_c(z));
    double s = absc.back();
    for (std::size_t k = absc.size() - 1; k-- > 0;) s = s * az + absc[k];
    const double eps = approx(std::numeric_limits<F>::epsilon());
    return std::max(approx(F(abs(p))), eps * (2.0 * static_cast<double>(c.size()) - 1.0) * s);
}

template <unsigned D>
bool solve_level(const std::vector<Int>& ic, std::vector<std::complex<double>>& guesses,
                 unsigned max_iter, double residual_tol, std::vector<Root>& out) {
    using F = BigFloat<D>;
    using C = BigComplex<D>;

    Int top = 0;
    for (const Int& v : ic) top = std::max(top, Int(abs(v)));
    F scale(top);
    std::vector<F> c(ic.size());
    std::vector<double> absc(ic.size());
    for (std::size_t i = 0; i < ic.size(); ++i) {
        c[i] = F(ic[i]) / scale;
        absc[i] = std::abs(approx(c[i]));
    }

    std::vector<C> z;
    z.reserve(guesses.size());
    for (const auto& g : guesses) z.emplace_back(F(g.real()), F(g.imag()));

    const F tol = pow(F(10), -static_cast<int>(2 * D / 3));
    const std::size_t frozen = aberth_pass(c, z, max_iter, tol);
    const bool converged = frozen == z.size();

    // Keep partial progress as the next level's starting point, unless the
    // pass made no headway; then the caller's guesses are the better start.
    if (2 * frozen >= z.size())
        for (std::size_t i = 0; i < z.size(); ++i) guesses[i] = approx_c(z[i]);
    if (!converged) return false;

    out.clear();
    out.reserve(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double r = certified_residual(c, absc, z[i]);
        if (!(r < residual_tol)) return false;
        out.push_back({guesses[i], r});
    }
    return true;
}

} // namespace

RootSet find_roots(const IntPolynomial& p, const RootFindOptions& opts) {
    if (opts.precision > 240)
        throw Unsupported("root finding supports at most 240 digits");

    std::vector<Int> c = p.coefficients();
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
    if (c.size() <= 1) return {};

    const std::size_t n = c.size() - 1;
    std::vector<std::complex<double>> guesses = opts.initial_guesses;
    if (guesses.size() > n) guesses.resize(n);
    for (std::size_t i = guesses.size(); i < n; ++i) {
        double ang =
            2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) + 0.77;
        guesses.push_back(std::polar(0.93, ang));
    }

    // The coefficient size dictates how many digits the evaluation noise
    // floor leaves for locating roots; start at the first level that can
    // resolve them rather than burning iterations on ones that cannot.
    Int top = 0;
    for (const Int& v : c) top = std::max(top, Int(abs(v)));
    const double est = static_cast<double>(boost::multiprecision::msb(top)) * 0.30103 + 10.0;

    if (est <= 14.0) {
        std::vector<double> cd(c.size());
        double scale = 0;
        for (const Int& v : c) scale = std::max(scale, std::abs(v.convert_to<double>()));
        for (std::size_t i = 0; i < c.size(); ++i) cd[i] = c[i].convert_to<double>() / scale;
        aberth_pass(cd, guesses, std::min(opts.max_iterations, 300u), 1e-13);
    }

    std::vector<Root> roots;
    bool ok = false;
    if (!ok && opts.precision <= 60 && est <= 60)
        ok = solve_level<60>(c, guesses, opts.max_iterations, opts.residual_tol, roots);
    if (!ok && opts.precision <= 120 && est <= 120)
        ok = solve_level<120>(c, guesses, opts.max_iterations, opts.residual_tol, roots);
    if (!ok)
        ok = solve_level<240>(c, guesses, opts.max_iterations, opts.residual_tol, roots);
    if (!ok)
        throw NoConvergence("root finding failed at 240 digits for degree " + std::to_string(n));

    RootSet set;
    set.degree = static_cast<unsigned>(n);
    set.roots = std::move(roots);
    return set;
}

CircleReport unit_circle_report(const RootSet& set, double tol) {
    CircleReport report;
    for (const Root& r : set.roots) {
        double dev = std::abs(std::abs(r.value) - 1.0);
        report.max_deviation = std::max(report.max_deviation, dev);
        if (dev > tol) ++report.off_count;
    }
    return report;
}

ArcBounds arc_bounds(const RootSet& set, double tol) {
    if (set.roots.empty()) throw OffCircle("arc bounds of an empty root set");
    ArcBounds b{1.0, -1.0, std::numbers::pi, 0.0};
    for (const Root& r : set.roots) {
        if (std::abs(std::abs(r.value) - 1.0) > tol)
            throw OffCircle("root off the unit circle: |z| = " + std::to_string(std::abs(r.value)));
        double re = r.value.real();
        double a = std::abs(std::arg(r.value));
        b.min_re = std::min(b.min_re, re);
        b.max_re = std::max(b.max_re, re);
        b.min_abs_arg = std::min(b.min_abs_arg, a);
        b.max_abs_arg = std::max(b.max_abs_arg, a);
    }
    return b;
}

AngularHistogram angular_density(const std::vector<RootSet>& sets, unsigned bins) {
    std::vector<double> angles;
    for (const RootSet& set : sets)
        for (const Root& r : set.roots) angles.push_back(std::abs(std::arg(r.value)));
    AngularHistogram hist;
    if (angles.empty() || bins == 0) return hist;
    hist.max_angle = *std::max_element(angles.begin(), angles.end());
    hist.counts.assign(bins, 0);
    if (hist.max_angle == 0) {
        hist.counts[0] = angles.size();
        return hist;
    }
    for (double a : angles) {
        auto idx = static_cast<std::size_t>(a / hist.max_angle * bins);
        if (idx >= bins) idx = bins - 1;
        ++hist.counts[idx];
    }
    return hist;
}

EdgeFit edge_exponent(const std::vector<RootSet>& sets, const EdgeFitOptions& opts) {
    std::size_t total = 0;
    for (const RootSet& set : sets) total += set.roots.size();
    if (total < 200)
        throw InsufficientData("edge fit needs at least 200 pooled roots, got " +
                               std::to_string(total));

    AngularHistogram hist = angular_density(sets, opts.bins);
    const double width = hist.bin_width();
    std::vector<std::pair<double, double>> pts; // (log10 distance, log10 count)
    unsigned skipped = 0;
    for (std::size_t i = hist.counts.size(); i-- > 0;) {
        if (hist.counts[i] == 0) continue;
        if (skipped < opts.skip_bins) {
            ++skipped;
            continue;
        }
        double d = (static_cast<double>(hist.counts.size() - i) - 0.5) * width;
        pts.emplace_back(std::log10(d), std::log10(static_cast<double>(hist.counts[i])));
    }
    if (!pts.empty()) {
        const double limit = pts.front().first + opts.decades;
        std::erase_if(pts, [limit](const auto& p) { return p.first > limit; });
    }
    if (pts.size() < 4)
        throw InsufficientData("edge fit window has fewer than 4 usable bins");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(pts.size());
    EdgeFit fit;
    fit.exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double intercept = (sy - fit.exponent * sx) / m;
    double ss = 0;
    for (const auto& [x, y] : pts) {
        double e = y - (fit.exponent * x + intercept);
        ss += e * e;
    }
    fit.fit_residual = std::sqrt(ss / m);
    fit.points = static_cast<unsigned>(pts.size());
    return fit;
}

std::vector<RootSet> trivalent_zero_sweep(unsigned gmax, const RootFindOptions& base) {
    std::vector<RootSet> out;
    out.reserve(gmax);
    RootFindOptions opts = base;
    for (unsigned g = 1; g <= gmax; ++g) {
        out.push_back(find_roots(alexander_trivalent_recursive(g), opts));

        // Warm start for the next genus: the measured angles sample a smooth
        // profile over k/(2g-1); resample it on the grid k/(2g+1) and mirror
        // into conjugates. This only reuses computed data, the next solve
        // still certifies every root.
        std::vector<double> th;
        for (const Root& r : out.back().roots)
            if (r.value.imag() > 0) th.push_back(std::arg(r.value));
        std::sort(th.rbegin(), th.rend());

        opts.initial_guesses.clear();
        if (th.size() >= 2) {
            const double den_old = 2.0 * g - 1.0;
            const double den_new = 2.0 * g + 1.0;
            for (std::size_t j = 0; j <= th.size(); ++j) {
                const double u = static_cast<double>(j) / den_new * den_old;
                const std::size_t last = th.size() - 1;
                double a;
                if (u >= static_cast<double>(last))
                    a = th[last] + (u - static_cast<double>(last)) * (th[last] - th[last - 1]);
                else {
                    const auto k = static_cast<std::size_t>(u);
                    const double f = u - static_cast<double>(k);
                    a = th[k] * (1.0 - f) + th[k + 1] * f;
                }
                a = std::clamp(a, 1e-4, std::numbers::pi / 3);
                opts.initial_guesses.push_back(std::polar(1.0, a));
                opts.initial_guesses.push_back(std::polar(1.0, -a));
            }
        }
    }
    return out;
}

} // namespace knotmat
