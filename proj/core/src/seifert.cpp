#include <knotmat/seifert.hpp>

#include <knotmat/errors.hpp>

#include <utility>

namespace knotmat {

SeifertMatrix::SeifertMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : SeifertMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw Error("Seifert matrix rows must be square");
        std::size_t j = 0;
        for (long long v : row) at(i, j++) = v;
        ++i;
    }
}

SeifertMatrix SeifertMatrix::transposed() const {
    SeifertMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

SeifertMatrix trivalent_family(unsigned g) {
    const std::size_t n = 2 * static_cast<std::size_t>(g);
    SeifertMatrix v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v.at(i, i) = (i == 0 || i == n - 1) ? 1 : 2;
        if (i + 1 < n) v.at(i, i + 1) = 1;
    }
    return v;
}

IntPolynomial alexander_polynomial(const SeifertMatrix& V) {
    const std::size_t n = V.size();
    if (n == 0) return IntPolynomial{1};

    std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Int> c{-V.at(j, i), V.at(i, j)};
            m[i][j] = IntPolynomial(std::move(c));
        }

    int sign = 1;
    IntPolynomial prev{1};
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

IntPolynomial alexander_trivalent_recursive(unsigned g) {
    const IntPolynomial edge{-1, 1};          // t - 1
    const IntPolynomial interior{-2, 2};      // 2(t - 1)
    const IntPolynomial t_shift{0, 1};        // t

    IntPolynomial prev2{1};
    IntPolynomial prev1 = edge;
    if (g == 0) return prev2;
    for (unsigned j = 2; j + 1 <= 2 * g; ++j) {
        IntPolynomial cur = interior * prev1 + t_shift * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return edge * prev1 + t_shift * prev2;
}

IntPolynomial torus_2n_alexander(int n) {
    if (n < 1 || n % 2 == 0)
        throw EvenParameter("torus value needs an odd strand power, got " + std::to_string(n));
    std::vector<Int> c(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] = (j % 2 == 0) ? 1 : -1;
    return IntPolynomial(std::move(c));
}

IntPolynomial normalize(const IntPolynomial& delta) {
    if (delta.is_zero()) return {};
    const auto& c = delta.coefficients();
    std::size_t low = 0;
    while (c[low] == 0) ++low;
    IntPolynomial r(std::vector<Int>(c.begin() + static_cast<std::ptrdiff_t>(low), c.end()));
    if (r.coefficients().front() < 0) r = -r;
    return r;
}

IntPolynomial laurent_in_z(const std::map<int, Int>& laurent) {
    std::map<int, Int> rem;
    for (const auto& [e, v] : laurent)
        if (v != 0) rem.emplace(e, v);

    IntPolynomial out;
    while (!rem.empty()) {
        int d = std::max(std::abs(rem.begin()->first), std::abs(rem.rbegin()->first));
        Int lead = 0;
        if (auto it = rem.find(d); it != rem.end()) lead = it->second;
        Int mirror = 0;
        if (auto it = rem.find(-d); it != rem.end()) mirror = it->second;
        if (d == 0) {
            out += IntPolynomial::monomial(0, lead);
            break;
        }
        if (mirror != (d % 2 ? -lead : lead))
            throw NonSymmetrizable("Laurent polynomial is not a polynomial in s - 1/s");
        out += IntPolynomial::monomial(static_cast<unsigned>(d), lead);
        // subtract lead * (s - 1/s)^d
        for (int j = 0; j <= d; ++j) {
            Int c = lead * binomial(static_cast<unsigned>(d), static_cast<unsigned>(j));
            if (j % 2) c = -c;
            int e = d - 2 * j;
            auto it = rem.find(e);
            if (it == rem.end()) {
                if (c != 0) rem.emplace(e, -c);
            } else {
                it->second -= c;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return out;
}

IntPolynomial conway_polynomial(const SeifertMatrix& V) {
    IntPolynomial delta = alexander_polynomial(V);
    std::map<int, Int> laurent;
    const int n = static_cast<int>(V.size());
    const auto& c = delta.coefficients();
    for (int j = 0; j < static_cast<int>(c.size()); ++j)
        if (c[static_cast<std::size_t>(j)] != 0) laurent[2 * j - n] = c[static_cast<std::size_t>(j)];
    return laurent_in_z(laurent);
}

} // namespace knotmat
