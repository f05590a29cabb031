#include <knotmat/errors.hpp>
#include <knotmat/exactmoments.hpp>

#include <doctest.h>

#include <random>

using namespace knotmat;

namespace {

NPolynomial poly(std::initializer_list<std::pair<unsigned, long long>> terms) {
    NPolynomial p;
    for (auto [e, c] : terms) p.set(e, Rational(c));
    return p;
}

TraceMonomial mono(const std::vector<int>& powers) { return TraceMonomial::from_powers(powers); }

// all monomials (multisets of powers >= 1) with the given total degree
void partitions(int total, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(total, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(total - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> monomials_of_degree(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions(total, total, cur, out);
    return out;
}

} // namespace

TEST_SUITE("exactmoments") {

TEST_CASE("pinned moment polynomials") {
    CHECK(wick_moment_bruteforce(mono({2})) == poly({{2, 1}}));
    CHECK(wick_moment_bruteforce(mono({4})) == poly({{3, 2}, {1, 1}}));
    CHECK(wick_moment_bruteforce(mono({6})) == poly({{4, 5}, {2, 10}}));
    CHECK(wick_moment_bruteforce(mono({8})) == poly({{5, 14}, {3, 70}, {1, 21}}));
    CHECK(wick_moment_bruteforce(mono({1, 1})) == poly({{1, 1}}));
    CHECK(wick_moment_bruteforce(mono({3, 3})) == poly({{3, 12}, {1, 3}}));
    CHECK(wick_moment_bruteforce(mono({2, 2})) == poly({{4, 1}, {2, 2}}));
    CHECK(wick_moment_bruteforce(mono({4, 2})) == poly({{5, 2}, {3, 9}, {1, 4}}));
    CHECK(wick_moment_bruteforce(mono({3, 3, 2})) == poly({{5, 12}, {3, 75}, {1, 18}}));
    CHECK(wick_moment_bruteforce(mono({2, 1, 1})) == poly({{3, 1}, {1, 2}}));
    CHECK(wick_moment_bruteforce(mono({5, 3})) == poly({{4, 45}, {2, 60}}));
    CHECK(wick_moment_bruteforce(mono({5, 1})) == poly({{3, 10}, {1, 5}}));
    CHECK(wick_moment_bruteforce(mono({3, 1})) == poly({{2, 3}}));
    CHECK(wick_moment_bruteforce(mono({4, 4})) == poly({{6, 4}, {4, 40}, {2, 61}}));
    CHECK(wick_moment_bruteforce(mono({2, 2, 2})) == poly({{6, 1}, {4, 6}, {2, 8}}));
}

TEST_CASE("odd total degree vanishes") {
    CHECK(wick_moment_bruteforce(mono({3})).is_zero());
    CHECK(wick_moment_bruteforce(mono({3, 3, 3})).is_zero());
    CHECK(wick_moment_recursive(mono({5, 2})).is_zero());
    CHECK(replica_coefficient(mono({7})) == 0);
}

TEST_CASE("recursive route equals brute force through degree 12") {
    for (int total = 2; total <= 12; total += 2) {
        for (const auto& powers : monomials_of_degree(total)) {
            auto brute = wick_moment_bruteforce(mono(powers));
            auto rec = wick_moment_recursive(mono(powers));
            CAPTURE(mono(powers).str());
            CHECK(brute == rec);
        }
    }
}

TEST_CASE("normalization and parity invariants on random monomials") {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<int> count_dist(1, 5);
    std::uniform_int_distribution<int> power_dist(1, 9);
    int checked = 0;
    while (checked < 60) {
        std::vector<int> powers;
        int k = count_dist(rng);
        for (int i = 0; i < k; ++i) powers.push_back(power_dist(rng));
        int m = 0;
        for (int p : powers) m += p;
        if (m % 2) continue;
        ++checked;
        auto moment = wick_moment_recursive(mono(powers));
        CAPTURE(mono(powers).str());
        CHECK(moment.eval(1) == Rational(double_factorial(m - 1)));
        unsigned parity = static_cast<unsigned>(m / 2 + k) % 2;
        unsigned bound = static_cast<unsigned>(m / 2 + k);
        for (const auto& [e, c] : moment.coefficients()) {
            CHECK(e % 2 == parity);
            CHECK(e <= bound);
            CHECK(e >= 1);
        }
    }
}

TEST_CASE("replica and link coefficient extraction") {
    CHECK(replica_coefficient(mono({3, 3})) == 3);
    CHECK(replica_coefficient(mono({5, 5})) == 165);
    CHECK(replica_coefficient(mono({3, 3, 3, 3})) == 0);
    CHECK(replica_coefficient(mono({5, 1})) == 5);
    CHECK(replica_coefficient(mono({8, 4, 4})) == 221760);
    CHECK(link_coefficient(mono({2}), 2) == 1);
    CHECK(link_coefficient(mono({6}), 2) == 10);
    CHECK(link_coefficient(mono({4}), 2) == 0);
}

TEST_CASE("census counts") {
    auto c33 = diagram_census(mono({3, 3}));
    REQUIRE(c33.size() == 2);
    CHECK(c33[3] == 12);
    CHECK(c33[1] == 3);

    auto c2 = diagram_census(mono({2}));
    REQUIRE(c2.size() == 1);
    CHECK(c2[2] == 1);

    auto c4 = diagram_census(mono({4}));
    CHECK(c4[3] == 2);
    CHECK(c4[1] == 1);

    // counts sum to (m-1)!!
    auto c = diagram_census(mono({4, 3, 3}));
    Int sum = 0;
    for (const auto& [e, n] : c) sum += n;
    CHECK(sum == double_factorial(9));
}

TEST_CASE("parallel determinism") {
    MomentOptions one;
    one.threads = 1;
    MomentOptions many;
    many.threads = 7;
    CHECK(wick_moment_bruteforce(mono({4, 3, 3, 2}), one) ==
          wick_moment_bruteforce(mono({4, 3, 3, 2}), many));
    CHECK(diagram_census(mono({6, 4}), one) == diagram_census(mono({6, 4}), many));
}

TEST_CASE("pairing budget raises CapExceeded") {
    MomentOptions opts;
    opts.pairing_budget = 100;
    CHECK_THROWS_AS(wick_moment_bruteforce(mono({4, 4}), opts), CapExceeded);
    CHECK_THROWS_AS(diagram_census(mono({10, 4}), opts), CapExceeded);
    // recursion has its own budget
    MomentOptions tiny;
    tiny.memo_budget = 2;
    CHECK_THROWS_AS(wick_moment_recursive(mono({8, 6, 4}), tiny), CapExceeded);
}

TEST_CASE("coupled moments") {
    const Rational half(1, 2);

    SUBCASE("pinned single-pair values") {
        auto ab = coupled_moment(TraceMonomial({"AB"}), half);
        // N^2 c/(1-c^2) = N^2 * (1/2)/(3/4) = (2/3) N^2
        CHECK(ab == NPolynomial::monomial(2, Rational(2, 3)));
        auto aa = coupled_moment(TraceMonomial({"AA"}), half);
        CHECK(aa == NPolynomial::monomial(2, Rational(4, 3)));
        CHECK(coupled_moment(TraceMonomial({"AA"}), 0) == NPolynomial::monomial(2, 1));
    }

    SUBCASE("values frozen by independent enumeration at c=1/2, N=3") {
        auto at3 = [&](const TraceMonomial& spec) {
            return coupled_moment(spec, half).eval(3);
        };
        CHECK(at3(TraceMonomial({"AB"})) == 6);
        CHECK(at3(TraceMonomial({"AABB"})) == Rational(184, 3));
        CHECK(at3(TraceMonomial({"ABAB"})) == Rational(88, 3));
        CHECK(at3(TraceMonomial({"AA", "BB"})) == 152);
        CHECK(at3(TraceMonomial({"AB", "AB"})) == 56);
        CHECK(at3(TraceMonomial({"AAAA", "BB"})) == Rational(12160, 9));
        CHECK(at3(TraceMonomial({"ABAB", "AB", "AB"})) == Rational(14720, 3));
    }

    SUBCASE("full polynomials at c=1/2") {
        // <tr AABB> = N(N^2 c^2 + N^2 + c^2)/(1-c^2)^2
        auto aabb = coupled_moment(TraceMonomial({"AABB"}), half);
        CHECK(aabb.coefficient(3) == Rational(20, 9));
        CHECK(aabb.coefficient(1) == Rational(4, 9));
        // <tr ABAB> = N(2 N^2 c^2 + 1)/(1-c^2)^2
        auto abab = coupled_moment(TraceMonomial({"ABAB"}), half);
        CHECK(abab.coefficient(3) == Rational(8, 9));
        CHECK(abab.coefficient(1) == Rational(16, 9));
    }

    SUBCASE("c=0 factorizes over label-restricted monomials") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> count_dist(2, 4);
        std::uniform_int_distribution<int> len_dist(1, 4);
        std::bernoulli_distribution label_dist(0.5);
        int done = 0;
        while (done < 25) {
            std::vector<std::string> words;
            int k = count_dist(rng);
            for (int i = 0; i < k; ++i) {
                std::string w;
                int len = len_dist(rng);
                for (int j = 0; j < len; ++j) w += label_dist(rng) ? 'B' : 'A';
                words.push_back(w);
            }
            TraceMonomial spec(words);
            if (spec.total_legs() % 2) continue;

            // single-label words only: mixed words force tr of a mixed product,
            // which does not factor; restrict the property accordingly
            bool pure = true;
            std::vector<int> apow, bpow;
            for (const auto& w : words) {
                bool hasA = w.find('A') != std::string::npos;
                bool hasB = w.find('B') != std::string::npos;
                if (hasA && hasB) {
                    pure = false;
                    break;
                }
                (hasA ? apow : bpow).push_back(static_cast<int>(w.size()));
            }
            if (!pure) continue;
            int atot = 0, btot = 0;
            for (int p : apow) atot += p;
            for (int p : bpow) btot += p;
            ++done;

            auto lhs = coupled_moment(spec, 0);
            NPolynomial rhs(Rational(1));
            if (atot % 2 || btot % 2) {
                CHECK(lhs.is_zero());
                continue;
            }
            if (!apow.empty()) rhs = rhs * wick_moment_bruteforce(mono(apow));
            if (!bpow.empty()) rhs = rhs * wick_moment_bruteforce(mono(bpow));
            CAPTURE(spec.str());
            CHECK(lhs == rhs);
        }
    }

    SUBCASE("c^2 = 1 rejected") {
        CHECK_THROWS_AS(coupled_moment(TraceMonomial({"AB"}), 1), InvalidCoupling);
        CHECK_THROWS_AS(coupled_moment(TraceMonomial({"AB"}), -1), InvalidCoupling);
    }
}

TEST_CASE("trivalent tower matches closed count at g=1") {
    // [3,3] is the g=1 member of the (tr M^3)^(4g-2) family
    CHECK(replica_coefficient(mono({3, 3})) == 3);
}

TEST_CASE("monomial parsing") {
    CHECK(TraceMonomial::parse("3,3").trace_sizes() == std::vector<int>{3, 3});
    CHECK(TraceMonomial::parse("8,4,4").total_legs() == 16);
    auto coupled = TraceMonomial::parse("[AB],[AA]");
    CHECK_FALSE(coupled.single_matrix());
    CHECK(coupled.words() == std::vector<std::string>{"AB", "AA"});
    CHECK_THROWS(TraceMonomial::parse(""));
    CHECK_THROWS(TraceMonomial::parse("[XY]"));
    CHECK_THROWS(TraceMonomial::parse("0,3"));
}

} // TEST_SUITE
