#include <knotmat/knotpoly.hpp>

#include <knotmat/errors.hpp>
#include <knotmat/seifert.hpp>

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <thread>
#include <utility>

namespace knotmat {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, long long>> terms) {
    for (const auto& [e, c] : terms) {
        c_[e] += c;
        prune(e);
    }
}

LaurentPoly LaurentPoly::monomial(int exponent, Int coeff) {
    LaurentPoly p;
    if (coeff != 0) p.c_[exponent] = std::move(coeff);
    return p;
}

Int LaurentPoly::coeff(int exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? Int(0) : it->second;
}

void LaurentPoly::prune(int exponent) {
    auto it = c_.find(exponent);
    if (it != c_.end() && it->second == 0) c_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) {
        c_[e] += c;
        prune(e);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) {
        c_[e] -= c;
        prune(e);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) {
            r.c_[ea + eb] += ca * cb;
            r.prune(ea + eb);
        }
    return r;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

std::string to_string(const LaurentPoly& p, const std::string& var, int half) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Int& c = it->second;
        const bool neg = c < 0;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const Int mag = abs(c);
        std::string exp;
        if (it->first != 0) {
            if (half == 2 && it->first % 2 != 0)
                exp = "(" + std::to_string(it->first) + "/2)";
            else {
                const int e = half == 2 ? it->first / 2 : it->first;
                exp = e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e);
            }
        }
        if (exp.empty())
            out += mag.str();
        else {
            if (mag != 1) out += mag.str() + "*";
            out += var;
            if (exp != "1") out += "^" + exp;
        }
    }
    return out;
}

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, unsigned free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    std::map<unsigned, int> uses;
    for (const Crossing& x : crossings_) {
        if (x.sign != 1 && x.sign != -1)
            throw MalformedDiagram("crossing sign must be +1 or -1");
        for (unsigned a : x.arcs) ++uses[a];
    }
    for (const auto& [a, n] : uses)
        if (n != 2)
            throw MalformedDiagram("arc " + std::to_string(a) + " appears " + std::to_string(n) +
                                   " times, expected 2");
}

PlanarDiagram PlanarDiagram::mirrored() const {
    std::vector<Crossing> out;
    out.reserve(crossings_.size());
    for (const Crossing& x : crossings_)
        out.push_back({{x.arcs[1], x.arcs[2], x.arcs[3], x.arcs[0]}, -x.sign});
    return PlanarDiagram(std::move(out), free_loops_);
}

PlanarDiagram pd_from_tuples(const std::vector<std::array<unsigned, 4>>& tuples) {
    const long long narcs = 2ll * static_cast<long long>(tuples.size());
    std::vector<Crossing> out;
    out.reserve(tuples.size());
    for (const auto& t : tuples) {
        const auto wrap = [narcs](long long x) { return ((x % narcs) + narcs) % narcs; };
        const long long b = t[1], d = t[3];
        int sign;
        if (wrap(b - d) == 1)
            sign = 1;
        else if (wrap(d - b) == 1)
            sign = -1;
        else
            throw MalformedDiagram("cannot read a sign off arcs " + std::to_string(t[1]) +
                                   " and " + std::to_string(t[3]));
        out.push_back({t, sign});
    }
    return PlanarDiagram(std::move(out));
}

PlanarDiagram pd_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedDiagram(std::string("bad diagram JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("crossings"))
        throw MalformedDiagram("diagram JSON needs a crossings list");
    try {
        std::vector<std::array<unsigned, 4>> tuples;
        for (const auto& e : j.at("crossings")) {
            if (!e.is_array() || e.size() != 4)
                throw MalformedDiagram("each crossing is a list of 4 arc labels");
            tuples.push_back({e.at(0).get<unsigned>(), e.at(1).get<unsigned>(),
                              e.at(2).get<unsigned>(), e.at(3).get<unsigned>()});
        }
        const unsigned free_loops = j.value("free_loops", 0u);
        if (!j.contains("signs")) {
            auto d = pd_from_tuples(tuples);
            return PlanarDiagram(d.crossings(), free_loops);
        }
        const auto signs = j.at("signs").get<std::vector<int>>();
        if (signs.size() != tuples.size())
            throw MalformedDiagram("sign list does not match the crossing count");
        std::vector<Crossing> out;
        for (std::size_t i = 0; i < tuples.size(); ++i) out.push_back({tuples[i], signs[i]});
        return PlanarDiagram(std::move(out), free_loops);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedDiagram(std::string("bad diagram JSON: ") + e.what());
    }
}

namespace {

struct Dsu {
    std::vector<unsigned> parent;

    explicit Dsu(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<unsigned>(i);
    }
    void reset() {
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<unsigned>(i);
    }
    unsigned find(unsigned x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(unsigned a, unsigned b) { parent[find(a)] = find(b); }
};

} // namespace

PlanarDiagram braid_closure(const std::vector<int>& word, unsigned strands) {
    unsigned width = strands;
    for (int g : word) {
        if (g == 0) throw MalformedDiagram("braid letters are nonzero generator indices");
        width = std::max(width, static_cast<unsigned>(std::abs(g)) + 1);
    }
    if (strands != 0)
        for (int g : word)
            if (static_cast<unsigned>(std::abs(g)) + 1 > strands)
                throw MalformedDiagram("generator " + std::to_string(g) +
                                       " does not fit in " + std::to_string(strands) +
                                       " strands");

    std::vector<unsigned> cur(width);
    for (unsigned i = 0; i < width; ++i) cur[i] = i;
    unsigned next = width;
    std::vector<Crossing> crossings;
    std::vector<bool> touched(width, false);
    for (int g : word) {
        const unsigned k = static_cast<unsigned>(std::abs(g)) - 1;
        const unsigned u = cur[k], v = cur[k + 1];
        const unsigned x = next++, y = next++;
        if (g > 0)
            crossings.push_back({{v, y, x, u}, 1});
        else
            crossings.push_back({{u, v, y, x}, -1});
        cur[k] = x;
        cur[k + 1] = y;
        touched[k] = touched[k + 1] = true;
    }

    Dsu dsu(next);
    unsigned free_loops = 0;
    for (unsigned i = 0; i < width; ++i) {
        if (touched[i])
            dsu.unite(cur[i], i);
        else
            ++free_loops;
    }
    for (Crossing& x : crossings)
        for (unsigned& a : x.arcs) a = dsu.find(a);
    return PlanarDiagram(std::move(crossings), free_loops);
}

int writhe(const PlanarDiagram& d) {
    int w = 0;
    for (const Crossing& x : d.crossings()) w += x.sign;
    return w;
}

LaurentPoly kauffman_bracket(const PlanarDiagram& d, const BracketOptions& opts) {
    const std::size_t c = d.crossings().size();
    if (c > opts.crossing_cap)
        throw CapExceeded("state sum over " + std::to_string(c) + " crossings exceeds the cap of " +
                          std::to_string(opts.crossing_cap));
    if (c == 0 && d.free_loops() == 0) throw MalformedDiagram("empty diagram has no bracket");

    // Compact arc labels for the union-find.
    std::vector<unsigned> labels;
    for (const Crossing& x : d.crossings())
        for (unsigned a : x.arcs) labels.push_back(a);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    const auto index = [&](unsigned a) {
        return static_cast<unsigned>(std::lower_bound(labels.begin(), labels.end(), a) -
                                     labels.begin());
    };
    std::vector<std::array<unsigned, 4>> slots;
    slots.reserve(c);
    for (const Crossing& x : d.crossings())
        slots.push_back({index(x.arcs[0]), index(x.arcs[1]), index(x.arcs[2]), index(x.arcs[3])});

    const LaurentPoly delta{{2, -1}, {-2, -1}};
    std::vector<LaurentPoly> delta_pow{LaurentPoly::monomial(0)};
    for (std::size_t i = 0; i < c + d.free_loops(); ++i)
        delta_pow.push_back(delta_pow.back() * delta);

    const std::uint64_t total = std::uint64_t(1) << c;
    auto run = [&](std::uint64_t begin, std::uint64_t stride, LaurentPoly& acc) {
        Dsu dsu(labels.size());
        for (std::uint64_t mask = begin; mask < total; mask += stride) {
            dsu.reset();
            for (std::size_t k = 0; k < c; ++k) {
                const auto& s = slots[k];
                if ((mask >> k) & 1) { // B-smoothing
                    dsu.unite(s[0], s[3]);
                    dsu.unite(s[1], s[2]);
                } else {
                    dsu.unite(s[0], s[1]);
                    dsu.unite(s[2], s[3]);
                }
            }
            unsigned loops = d.free_loops();
            for (unsigned i = 0; i < labels.size(); ++i)
                if (dsu.find(i) == i) ++loops;
            const int b = std::popcount(mask);
            const int exponent = static_cast<int>(c) - 2 * b;
            acc += LaurentPoly::monomial(exponent) * delta_pow[loops - 1];
        }
    };

    unsigned want = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (want == 0) want = 1;
    const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(want, total));
    if (threads <= 1) {
        LaurentPoly acc;
        run(0, 1, acc);
        return acc;
    }
    std::vector<LaurentPoly> partial(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] { run(t, threads, partial[t]); });
    for (auto& th : pool) th.join();
    LaurentPoly acc;
    for (const LaurentPoly& p : partial) acc += p;
    return acc;
}

LaurentPoly jones_polynomial(const PlanarDiagram& d, const BracketOptions& opts) {
    const LaurentPoly bracket = kauffman_bracket(d, opts);
    const int w = writhe(d);
    const bool flip = w % 2 != 0;
    LaurentPoly out;
    for (const auto& [e, c] : bracket.terms()) {
        // t = A^(-4) on the doubled lattice, times (-A)^(-3w)
        const int key = -(e - 3 * w) / 2;
        out += LaurentPoly::monomial(key, flip ? -c : c);
    }
    return out;
}

SkeinResult skein_check(const PlanarDiagram& plus, const PlanarDiagram& minus,
                        const PlanarDiagram& zero, const BracketOptions& opts) {
    const LaurentPoly vp = jones_polynomial(plus, opts);
    const LaurentPoly vm = jones_polynomial(minus, opts);
    const LaurentPoly v0 = jones_polynomial(zero, opts);
    const LaurentPoly lhs = LaurentPoly::monomial(-2) * vp - LaurentPoly::monomial(2) * vm;
    const LaurentPoly rhs = LaurentPoly{{1, 1}, {-1, -1}} * v0;
    SkeinResult r;
    r.residual = lhs - rhs;
    r.ok = r.residual.is_zero();
    return r;
}

std::vector<Rational> vassiliev_coefficients(const LaurentPoly& jones, unsigned jmax) {
    std::vector<Rational> v(jmax + 1, Rational(0));
    for (const auto& [e, c] : jones.terms()) {
        const Rational base(e, 2);
        Rational power(1);
        Int fact(1);
        for (unsigned j = 0; j <= jmax; ++j) {
            if (j > 0) {
                power *= base;
                fact *= j;
            }
            v[j] += Rational(c) * power / Rational(fact);
        }
    }
    return v;
}

IntPolynomial conway_from_alexander(const IntPolynomial& delta) {
    if (delta.is_zero() || delta.degree() % 2 != 0)
        throw NotPalindromic("need an even-degree polynomial");
    const int d = delta.degree();
    for (int i = 0; i <= d; ++i)
        if (delta.coefficient(i) != delta.coefficient(d - i))
            throw NotPalindromic("coefficients do not read the same both ways");
    const Int unit = delta.eval(Int(1));
    if (unit != 1 && unit != -1)
        throw NotPalindromic("value at 1 is " + unit.str() + ", expected a unit");

    std::map<int, Int> laurent;
    for (int i = 0; i <= d; ++i) {
        const Int c = delta.coefficient(i) * unit;
        if (c != 0) laurent[2 * i - d] = c;
    }
    return laurent_in_z(laurent);
}

} // namespace knotmat
