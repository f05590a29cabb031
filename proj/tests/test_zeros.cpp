#include <doctest.h>

#include <knotmat/errors.hpp>
#include <knotmat/seifert.hpp>
#include <knotmat/zeros.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace knotmat;

namespace {

constexpr double pi = std::numbers::pi;

// Exact zero arguments of the bidiagonal family: substituting y = t + 1/t
// collapses the degree-2g polynomial to one with real roots, which solve in
// closed form as theta_k = 2*asin(cos(k*pi/(2g-1))/2), k = 0..g-1; k = 0 is
// the edge value pi/3 for every g.
std::vector<double> exact_angles(unsigned g) {
    std::vector<double> a;
    for (unsigned k = 0; k < g; ++k)
        a.push_back(2.0 * std::asin(std::cos(k * pi / (2.0 * g - 1.0)) / 2.0));
    return a;
}

RootSet synthetic(const std::vector<double>& angles) {
    RootSet s;
    s.degree = static_cast<unsigned>(angles.size());
    for (double a : angles) s.roots.push_back({std::polar(1.0, a), 0.0});
    return s;
}

const std::vector<RootSet>& sweep40() {
    static const std::vector<RootSet> sets = trivalent_zero_sweep(40);
    return sets;
}

} // namespace

TEST_SUITE("zeros") {

TEST_CASE("pinned small polynomials") {
    auto hex = find_roots(IntPolynomial{1, -1, 1});
    REQUIRE(hex.roots.size() == 2);
    CHECK(hex.degree == 2);
    for (const Root& r : hex.roots) {
        CHECK(r.residual < 1e-12);
        CHECK(std::abs(r.value.real() - 0.5) < 1e-12);
        CHECK(std::abs(std::abs(r.value.imag()) - std::sqrt(3.0) / 2.0) < 1e-12);
    }

    auto dec = find_roots(torus_2n_alexander(5));
    REQUIRE(dec.roots.size() == 4);
    std::vector<double> args;
    for (const Root& r : dec.roots) args.push_back(std::arg(r.value));
    std::sort(args.begin(), args.end());
    std::vector<double> expect{-3 * pi / 5, -pi / 5, pi / 5, 3 * pi / 5};
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(args[i] - expect[i]) < 1e-12);

    auto pm = find_roots(IntPolynomial{-1, 0, 1});
    REQUIRE(pm.roots.size() == 2);
    std::vector<double> re{pm.roots[0].value.real(), pm.roots[1].value.real()};
    std::sort(re.begin(), re.end());
    CHECK(std::abs(re[0] + 1.0) < 1e-12);
    CHECK(std::abs(re[1] - 1.0) < 1e-12);
    CHECK(std::abs(pm.roots[0].value.imag()) < 1e-12);
}

TEST_CASE("origin zeros are stripped") {
    auto set = find_roots(IntPolynomial{0, 0, -1, 1}); // t^2 (t - 1)
    CHECK(set.degree == 1);
    REQUIRE(set.roots.size() == 1);
    CHECK(std::abs(set.roots[0].value - std::complex<double>(1, 0)) < 1e-12);
}

TEST_CASE("family roots match the closed-form angles") {
    for (unsigned g : {1u, 2u, 3u, 5u, 8u, 12u, 20u, 30u}) {
        auto set = find_roots(alexander_trivalent_recursive(g));
        REQUIRE(set.roots.size() == 2 * g);
        std::vector<double> args;
        for (const Root& r : set.roots) args.push_back(std::arg(r.value));
        std::sort(args.begin(), args.end());
        std::vector<double> expect;
        for (double a : exact_angles(g)) {
            expect.push_back(a);
            expect.push_back(-a);
        }
        std::sort(expect.begin(), expect.end());
        for (std::size_t i = 0; i < expect.size(); ++i)
            CHECK(std::abs(args[i] - expect[i]) < 1e-9);
    }
}

TEST_CASE("conjugate closure") {
    auto set = find_roots(alexander_trivalent_recursive(7));
    for (const Root& r : set.roots) {
        auto conj = std::conj(r.value);
        bool found = false;
        for (const Root& other : set.roots)
            if (std::abs(other.value - conj) < 1e-10) {
                found = true;
                break;
            }
        CHECK(found);
    }
}

TEST_CASE("deterministic output") {
    auto a = find_roots(alexander_trivalent_recursive(6));
    auto b = find_roots(alexander_trivalent_recursive(6));
    REQUIRE(a.roots.size() == b.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
        CHECK(a.roots[i].value == b.roots[i].value);
        CHECK(a.roots[i].residual == b.roots[i].residual);
    }
}

TEST_CASE("circle report") {
    auto g1 = unit_circle_report(find_roots(IntPolynomial{1, -1, 1}));
    CHECK(g1.max_deviation < 1e-12);
    CHECK(g1.off_count == 0);

    auto g30 = unit_circle_report(find_roots(alexander_trivalent_recursive(30)));
    CHECK(g30.max_deviation < 1e-10);
    CHECK(g30.off_count == 0);

    auto off = unit_circle_report(find_roots(IntPolynomial{-2, 1}));
    CHECK(off.max_deviation == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(off.off_count == 1);
}

TEST_CASE("arc bounds") {
    auto g10 = arc_bounds(find_roots(alexander_trivalent_recursive(10)));
    CHECK(g10.min_re >= 0.5 - 1e-9);
    CHECK(g10.max_re < 1.0);
    CHECK(g10.max_abs_arg <= pi / 3 + 1e-9);

    auto torus = arc_bounds(find_roots(torus_2n_alexander(5)));
    CHECK(std::abs(torus.min_abs_arg - pi / 5) < 1e-12);
    CHECK(std::abs(torus.max_abs_arg - 3 * pi / 5) < 1e-12);

    auto hex = arc_bounds(find_roots(IntPolynomial{1, -1, 1}));
    CHECK(std::abs(hex.min_re - 0.5) < 1e-12);
    CHECK(std::abs(hex.max_re - 0.5) < 1e-12);

    CHECK_THROWS_AS(arc_bounds(find_roots(IntPolynomial{-2, 1})), OffCircle);
}

TEST_CASE("edge accumulation for the family sweep") {
    const auto& sets = sweep40();
    REQUIRE(sets.size() == 40);

    for (const RootSet& set : sets) {
        auto report = unit_circle_report(set);
        CHECK(report.off_count == 0);
    }

    // every set from g >= 20 has roots within 1e-3 of both edge angles
    for (std::size_t gi = 19; gi < sets.size(); ++gi) {
        double best_pos = 1, best_neg = 1;
        for (const Root& r : sets[gi].roots) {
            best_pos = std::min(best_pos, std::abs(std::arg(r.value) - pi / 3));
            best_neg = std::min(best_neg, std::abs(std::arg(r.value) + pi / 3));
        }
        CHECK(best_pos < 1e-3);
        CHECK(best_neg < 1e-3);
        auto bounds = arc_bounds(sets[gi]);
        CHECK(bounds.max_abs_arg <= pi / 3 + 1e-9);
    }

    auto hist = angular_density(sets, 64);
    REQUIRE(hist.counts.size() == 64);
    CHECK(std::abs(hist.max_angle - pi / 3) < 1e-9);
    auto max_it = std::max_element(hist.counts.begin(), hist.counts.end());
    CHECK(max_it == hist.counts.end() - 1);
}

TEST_CASE("histogram basics") {
    CHECK(angular_density({}, 64).counts.empty());

    std::vector<double> uniform;
    for (int i = 0; i < 6400; ++i) uniform.push_back((i + 0.5) / 6400.0);
    auto flat = angular_density({synthetic(uniform)}, 64);
    auto [lo, hi] = std::minmax_element(flat.counts.begin(), flat.counts.end());
    CHECK(*hi - *lo <= 2);
}

TEST_CASE("edge exponent self-tests") {
    std::vector<double> sqrt_angles;
    for (int i = 0; i < 20000; ++i) {
        double u = (i + 0.5) / 20000.0;
        sqrt_angles.push_back(pi / 3 - (pi / 3) * u * u);
    }
    auto sqrt_fit = edge_exponent({synthetic(sqrt_angles)});
    CHECK(sqrt_fit.exponent > -0.52);
    CHECK(sqrt_fit.exponent < -0.48);

    std::vector<double> uniform;
    for (int i = 0; i < 20000; ++i) uniform.push_back((i + 0.5) / 20000.0 * pi / 3);
    auto flat_fit = edge_exponent({synthetic(uniform)});
    CHECK(std::abs(flat_fit.exponent) < 0.05);

    std::vector<double> few(uniform.begin(), uniform.begin() + 100);
    CHECK_THROWS_AS(edge_exponent({synthetic(few)}), InsufficientData);

    std::vector<double> spike(300, 0.5);
    CHECK_THROWS_AS(edge_exponent({synthetic(spike)}), InsufficientData);
}

TEST_CASE("escalation limits") {
    IntPolynomial wide{120, -154, 71, -14, 1}; // roots 2, 3, 4, 5
    RootFindOptions strict;
    strict.precision = 240;
    strict.max_iterations = 1;
    CHECK_THROWS_AS(find_roots(wide, strict), NoConvergence);

    RootFindOptions beyond;
    beyond.precision = 500;
    CHECK_THROWS_AS(find_roots(wide, beyond), Unsupported);

    auto fine = find_roots(wide);
    std::vector<double> re;
    for (const Root& r : fine.roots) re.push_back(r.value.real());
    std::sort(re.begin(), re.end());
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(re[i] - static_cast<double>(i + 2)) < 1e-10);
}

} // TEST_SUITE
