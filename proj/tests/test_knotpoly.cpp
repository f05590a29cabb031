#include <doctest.h>

#include <knotmat/errors.hpp>
#include <knotmat/knotpoly.hpp>
#include <knotmat/seifert.hpp>

#include <array>
#include <map>
#include <vector>

using namespace knotmat;

namespace {

// Independent bracket oracle: loops are counted by walking the 2-regular
// glue graph edge by edge instead of union-find.
LaurentPoly bracket_oracle(const PlanarDiagram& d) {
    const auto& xs = d.crossings();
    const std::size_t c = xs.size();
    const LaurentPoly delta{{2, -1}, {-2, -1}};
    LaurentPoly acc;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << c); ++mask) {
        std::multimap<unsigned, unsigned> glue;
        for (std::size_t k = 0; k < c; ++k) {
            const auto& a = xs[k].arcs;
            const auto join = [&](unsigned p, unsigned q) {
                glue.emplace(p, q);
                glue.emplace(q, p);
            };
            if ((mask >> k) & 1) {
                join(a[0], a[3]);
                join(a[1], a[2]);
            } else {
                join(a[0], a[1]);
                join(a[2], a[3]);
            }
        }
        unsigned loops = d.free_loops();
        while (!glue.empty()) {
            ++loops;
            unsigned start = glue.begin()->first;
            unsigned at = start;
            do {
                auto it = glue.find(at);
                unsigned next = it->second;
                glue.erase(it);
                auto back = glue.find(next);
                while (back->second != at) ++back;
                glue.erase(back);
                at = next;
            } while (glue.contains(at));
        }
        int exp = 0;
        for (std::size_t k = 0; k < c; ++k) exp += (mask >> k) & 1 ? -1 : 1;
        LaurentPoly term = LaurentPoly::monomial(exp);
        for (unsigned i = 1; i < loops; ++i) term = term * delta;
        acc += term;
    }
    return acc;
}

PlanarDiagram trefoil() { return pd_from_tuples({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}); }

PlanarDiagram figure_eight() {
    return pd_from_tuples({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}});
}

PlanarDiagram cinquefoil() {
    return pd_from_tuples({{1, 6, 2, 7}, {3, 8, 4, 9}, {5, 10, 6, 1}, {7, 2, 8, 3}, {9, 4, 10, 5}});
}

PlanarDiagram five_two() {
    return pd_from_tuples({{1, 4, 2, 5}, {3, 8, 4, 9}, {5, 10, 6, 1}, {9, 6, 10, 7}, {7, 2, 8, 3}});
}

PlanarDiagram hopf() { return pd_from_tuples({{4, 1, 3, 2}, {2, 3, 1, 4}}); }

// Insert a cancelling generator pair (second Reidemeister move).
std::vector<int> r2(std::vector<int> word, int g, std::size_t pos) {
    word.insert(word.begin() + pos, {g, -g});
    return word;
}

// Replace the leading s,t,s by t,s,t for adjacent generators (third move).
std::vector<int> r3_swap(std::vector<int> word) {
    const int s = word[0], t = word[1];
    word[0] = t;
    word[1] = s;
    word[2] = t;
    return word;
}

} // namespace

TEST_SUITE("knotpoly") {

TEST_CASE("laurent arithmetic") {
    LaurentPoly p{{2, 1}, {0, -3}};
    LaurentPoly q{{-2, 2}};
    CHECK((p + q) == LaurentPoly{{2, 1}, {0, -3}, {-2, 2}});
    CHECK((p - p).is_zero());
    CHECK((p * q) == LaurentPoly{{0, 2}, {-2, -6}});
    CHECK(-q == LaurentPoly{{-2, -2}});
    CHECK(p.mirrored() == LaurentPoly{{-2, 1}, {0, -3}});
    CHECK(LaurentPoly{{3, 1}, {3, -1}}.is_zero());
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(5) == 0);

    CHECK(to_string(LaurentPoly{}, "t") == "0");
    CHECK(to_string(LaurentPoly{{2, -1}, {-2, -1}}, "A") == "-A^2 - A^(-2)");
    CHECK(to_string(LaurentPoly{{-1, -1}, {-5, -1}}, "t", 2) == "-t^(-1/2) - t^(-5/2)");
    CHECK(to_string(LaurentPoly{{2, 3}, {0, 1}}, "t", 2) == "3*t + 1");
}

TEST_CASE("diagram validation") {
    CHECK_THROWS_AS(PlanarDiagram({{{1, 2, 3, 4}, 1}}), MalformedDiagram);
    CHECK_THROWS_AS(PlanarDiagram({{{1, 1, 2, 2}, 0}}), MalformedDiagram);
    CHECK_THROWS_AS(pd_from_tuples({{1, 3, 2, 1}}), MalformedDiagram);
    CHECK(PlanarDiagram::unknot().free_loops() == 1);
    CHECK_THROWS_AS(kauffman_bracket(PlanarDiagram{}), MalformedDiagram);
}

TEST_CASE("signs from arc numbering") {
    CHECK(writhe(trefoil()) == -3);
    CHECK(writhe(figure_eight()) == 0);
    CHECK(writhe(cinquefoil()) == -5);
    CHECK(writhe(five_two()) == -5);
    CHECK(writhe(hopf()) == -2);
    CHECK(writhe(PlanarDiagram::unknot()) == 0);
    std::vector<int> fig8;
    for (const Crossing& x : figure_eight().crossings()) fig8.push_back(x.sign);
    CHECK(fig8 == std::vector<int>{1, 1, -1, -1});
}

TEST_CASE("bracket agrees with the walk oracle") {
    for (const PlanarDiagram& d :
         {trefoil(), figure_eight(), cinquefoil(), five_two(), hopf(),
          braid_closure({1, 1, 1}), braid_closure({1, -2, 1, -2})}) {
        CHECK(kauffman_bracket(d, {.threads = 1}) == bracket_oracle(d));
    }
    CHECK(kauffman_bracket(PlanarDiagram::unknot()) == LaurentPoly::monomial(0));
}

TEST_CASE("parallel state sum matches sequential") {
    for (unsigned threads : {2u, 3u, 8u}) {
        CHECK(kauffman_bracket(five_two(), {.threads = threads}) ==
              kauffman_bracket(five_two(), {.threads = 1}));
    }
}

TEST_CASE("jones values") {
    CHECK(jones_polynomial(PlanarDiagram::unknot()) == LaurentPoly::monomial(0));
    CHECK(jones_polynomial(trefoil()) == LaurentPoly{{-8, -1}, {-6, 1}, {-2, 1}});
    CHECK(jones_polynomial(figure_eight()) ==
          LaurentPoly{{-4, 1}, {-2, -1}, {0, 1}, {2, -1}, {4, 1}});
    CHECK(jones_polynomial(cinquefoil()) ==
          LaurentPoly{{-14, -1}, {-12, 1}, {-10, -1}, {-8, 1}, {-4, 1}});
    CHECK(jones_polynomial(five_two()) ==
          LaurentPoly{{-12, -1}, {-10, 1}, {-8, -1}, {-6, 2}, {-4, -1}, {-2, 1}});
    CHECK(jones_polynomial(hopf()) == LaurentPoly{{-5, -1}, {-1, -1}});
    CHECK(to_string(jones_polynomial(hopf()), "t", 2) == "-t^(-1/2) - t^(-5/2)");
}

TEST_CASE("mirrors swap t and 1/t") {
    for (const PlanarDiagram& d : {trefoil(), cinquefoil(), five_two(), hopf()}) {
        CHECK(jones_polynomial(d.mirrored()) == jones_polynomial(d).mirrored());
        CHECK(writhe(d.mirrored()) == -writhe(d));
    }
    CHECK(jones_polynomial(figure_eight().mirrored()) == jones_polynomial(figure_eight()));
}

TEST_CASE("braid closures") {
    auto right_trefoil = braid_closure({1, 1, 1});
    CHECK(writhe(right_trefoil) == 3);
    CHECK(jones_polynomial(right_trefoil) == LaurentPoly{{8, -1}, {6, 1}, {2, 1}});
    CHECK(jones_polynomial(right_trefoil) == jones_polynomial(trefoil()).mirrored());

    CHECK(jones_polynomial(braid_closure({1})) == LaurentPoly::monomial(0)); // kink
    CHECK(jones_polynomial(braid_closure({-1})) == LaurentPoly::monomial(0));
    CHECK(jones_polynomial(braid_closure({1, 1})) == jones_polynomial(hopf()).mirrored());

    // figure-eight as a braid
    CHECK(jones_polynomial(braid_closure({1, -2, 1, -2})) == jones_polynomial(figure_eight()));

    CHECK_THROWS_AS(braid_closure({2}, 2), MalformedDiagram);
    CHECK_THROWS_AS(braid_closure({0}), MalformedDiagram);
}

TEST_CASE("trivial links") {
    const LaurentPoly circle_pair{{1, -1}, {-1, -1}}; // -(sqrt t + 1/sqrt t)
    LaurentPoly expect = LaurentPoly::monomial(0);
    for (unsigned mu = 1; mu <= 4; ++mu) {
        CHECK(jones_polynomial(braid_closure({}, mu)) == expect);
        expect = expect * circle_pair;
    }
    // an untouched strand next to a kinked one
    CHECK(jones_polynomial(braid_closure({1}, 3)) == circle_pair);
}

TEST_CASE("reidemeister moves fix the polynomial") {
    const std::vector<int> word{1, 1, 1};
    CHECK(jones_polynomial(braid_closure(r2(word, 1, 3))) == jones_polynomial(braid_closure(word)));
    CHECK(jones_polynomial(braid_closure(r2(word, -2, 1), 3)) ==
          jones_polynomial(braid_closure(word, 3)));

    const std::vector<int> r3a{1, 2, 1, 2};
    CHECK(jones_polynomial(braid_closure(r3_swap(r3a))) == jones_polynomial(braid_closure(r3a)));
    const std::vector<int> r3b{2, 1, 2, 2};
    CHECK(jones_polynomial(braid_closure(r3a)) == jones_polynomial(braid_closure(r3b)));
}

TEST_CASE("skein relation") {
    auto a = skein_check(braid_closure({1, 1, 1}), braid_closure({1, 1, -1}), braid_closure({1, 1}));
    CHECK(a.ok);
    CHECK(a.residual.is_zero());

    auto b = skein_check(braid_closure({1}), braid_closure({-1}), braid_closure({}, 2));
    CHECK(b.ok);

    auto bad = skein_check(braid_closure({1, 1, 1}), braid_closure({1, 1, 1}), braid_closure({1, 1}));
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.residual.is_zero());
}

TEST_CASE("vassiliev coefficients") {
    const std::vector<PlanarDiagram> knots{trefoil(), figure_eight(), cinquefoil(), five_two()};
    const std::vector<long long> v2{-3, 3, -9, -6};
    const std::vector<long long> v3{6, 0, 30, 18};
    for (std::size_t i = 0; i < knots.size(); ++i) {
        auto v = vassiliev_coefficients(jones_polynomial(knots[i]), 3);
        CHECK(v[0] == 1);
        CHECK(v[1] == 0);
        CHECK(v[2] == v2[i]);
        CHECK(v[3] == v3[i]);
    }
    auto mirrored = vassiliev_coefficients(jones_polynomial(trefoil().mirrored()), 2);
    CHECK(mirrored[2] == -3); // second order cannot see chirality
}

TEST_CASE("conway rewriting") {
    CHECK(conway_from_alexander({2, -3, 2}) == IntPolynomial{1, 0, 2});
    CHECK(conway_from_alexander({1, -1, 1}) == IntPolynomial{1, 0, 1});
    CHECK(conway_from_alexander({1, -3, 1}) == IntPolynomial{1, 0, -1});
    CHECK(conway_from_alexander({1}) == IntPolynomial{1});
    CHECK(conway_from_alexander(torus_2n_alexander(5)) == IntPolynomial{1, 0, 3, 0, 1});

    CHECK_THROWS_AS(conway_from_alexander({1, 1}), NotPalindromic);
    CHECK_THROWS_AS(conway_from_alexander({1, -2, 2}), NotPalindromic);
    CHECK_THROWS_AS(conway_from_alexander({2, -2, 2}), NotPalindromic);
    CHECK_THROWS_AS(conway_from_alexander(IntPolynomial{}), NotPalindromic);
}

TEST_CASE("second order matches the conway coefficient") {
    const std::vector<PlanarDiagram> knots{trefoil(), figure_eight(), cinquefoil(), five_two()};
    const std::vector<IntPolynomial> alexander{
        {1, -1, 1}, {1, -3, 1}, torus_2n_alexander(5), {2, -3, 2}};
    for (std::size_t i = 0; i < knots.size(); ++i) {
        auto v = vassiliev_coefficients(jones_polynomial(knots[i]), 2);
        const Int a2 = conway_from_alexander(alexander[i]).coefficient(2);
        CHECK(v[2] == Rational(-3 * a2));
    }
}

TEST_CASE("crossing cap") {
    const std::vector<int> long_word(17, 1);
    CHECK_THROWS_AS(kauffman_bracket(braid_closure(long_word)), CapExceeded);
    CHECK_THROWS_AS(jones_polynomial(five_two(), {.crossing_cap = 4}), CapExceeded);
    auto v = vassiliev_coefficients(
        jones_polynomial(braid_closure(long_word), {.crossing_cap = 17}), 0);
    CHECK(v[0] == 1);
}

TEST_CASE("diagram json") {
    const std::string with_signs = R"({
        "crossings": [[4,1,3,2],[2,3,1,4]],
        "signs": [-1,-1]
    })";
    CHECK(jones_polynomial(pd_from_json(with_signs)) == jones_polynomial(hopf()));

    const std::string bare = R"({"crossings": [[1,4,2,5],[3,6,4,1],[5,2,6,3]]})";
    CHECK(jones_polynomial(pd_from_json(bare)) == jones_polynomial(trefoil()));

    const std::string loops = R"({"crossings": [], "free_loops": 2})";
    CHECK(jones_polynomial(pd_from_json(loops)) == LaurentPoly{{1, -1}, {-1, -1}});

    CHECK_THROWS_AS(pd_from_json("notjson"), MalformedDiagram);
    CHECK_THROWS_AS(pd_from_json("{}"), MalformedDiagram);
    CHECK_THROWS_AS(pd_from_json(R"({"crossings": [[1,2,3]]})"), MalformedDiagram);
    CHECK_THROWS_AS(pd_from_json(R"({"crossings": [[1,4,2,5]], "signs": [1,1]})"),
                    MalformedDiagram);
}

} // TEST_SUITE
