#include <knotmat/multiseries.hpp>

#include <knotmat/errors.hpp>

#include <numeric>

namespace knotmat {

unsigned MultiSeries::total_degree(const Key& exponents) {
    return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

Rational MultiSeries::coefficient(const Key& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiSeries::add(const Key& exponents, const Rational& value) {
    if (value == 0 || total_degree(exponents) > cap_) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, value);
        return;
    }
    it->second += value;
    if (it->second == 0) terms_.erase(it);
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
    for (const auto& [e, v] : o.terms_) add(e, v);
    return *this;
}

MultiSeries& MultiSeries::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= s;
    return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    MultiSeries r(a.vars_, std::min(a.cap_, b.cap_));
    MultiSeries::Key key(a.vars_, 0);
    for (const auto& [ea, va] : a.terms_) {
        unsigned da = MultiSeries::total_degree(ea);
        for (const auto& [eb, vb] : b.terms_) {
            if (da + MultiSeries::total_degree(eb) > r.cap_) continue;
            for (unsigned i = 0; i < r.vars_; ++i) key[i] = ea[i] + eb[i];
            r.add(key, va * vb);
        }
    }
    return r;
}

MultiSeries MultiSeries::shifted(const Key& exponents) const {
    MultiSeries r(vars_, cap_);
    Key key(vars_, 0);
    for (const auto& [e, v] : terms_) {
        for (unsigned i = 0; i < vars_; ++i) key[i] = e[i] + exponents[i];
        r.add(key, v);
    }
    return r;
}

MultiSeries MultiSeries::divided_by_chi_squared() const {
    MultiSeries q(vars_, cap_ >= 2 ? cap_ - 2 : 0);
    std::map<Key, Rational> rem = terms_;
    while (!rem.empty()) {
        // Lex order makes sigma_1^2 the leading term of chi^2, so the leading
        // remainder term must be divisible by it.
        auto lead = std::prev(rem.end());
        Key t = lead->first;
        Rational c = lead->second;
        if (t[0] < 2)
            throw Error("series is not divisible by chi^2");
        t[0] -= 2;
        q.add(t, c);
        for (unsigned i = 0; i < vars_; ++i) {
            for (unsigned j = 0; j < vars_; ++j) {
                Key u = t;
                ++u[i];
                ++u[j];
                auto it = rem.find(u);
                if (it == rem.end()) {
                    rem.emplace(std::move(u), -c);
                } else {
                    it->second -= c;
                    if (it->second == 0) rem.erase(it);
                }
            }
        }
    }
    return q;
}

} // namespace knotmat
