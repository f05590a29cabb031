#include <knotmat/exactmoments.hpp>

#include <knotmat/errors.hpp>

#include <algorithm>
#include <thread>
#include <vector>

namespace knotmat {

namespace {

// gamma: leg -> successor inside its trace cycle, legs numbered consecutively
// trace by trace in input order
std::vector<int> gamma_of(const std::vector<int>& sizes) {
    int m = 0;
    for (int n : sizes) m += n;
    std::vector<int> g(static_cast<std::size_t>(m));
    int off = 0;
    for (int n : sizes) {
        for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(off + i)] = off + (i + 1) % n;
        off += n;
    }
    return g;
}

int count_loops(const std::vector<int>& gamma, const std::vector<int>& alpha) {
    const int m = static_cast<int>(gamma.size());
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    int loops = 0;
    for (int s = 0; s < m; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++loops;
        int x = s;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            x = gamma[static_cast<std::size_t>(alpha[static_cast<std::size_t>(x)])];
        }
    }
    return loops;
}

// Census cell for one thread: loop count (and mixed-pair count for the
// two-matrix case) -> number of pairings.
using Cell = std::pair<int, int>;
using CensusMap = std::map<Cell, std::uint64_t>;

struct EnumTask {
    const std::vector<int>& gamma;
    const std::vector<char>& labels; // empty for single-matrix
    bool prune_mixed = false;        // c == 0: same-label pairings only

    CensusMap counts;
    std::vector<int> alpha;
    std::vector<char> paired;

    void run(int first_partner_residue, int stride) {
        const int m = static_cast<int>(gamma.size());
        alpha.assign(static_cast<std::size_t>(m), -1);
        paired.assign(static_cast<std::size_t>(m), 0);
        paired[0] = 1;
        int idx = 0;
        for (int p = 1; p < m; ++p) {
            if (!compatible(0, p)) continue;
            if (idx++ % stride != first_partner_residue) continue;
            pair_legs(0, p);
            recurse(2, mixed(0, p));
            unpair_legs(0, p);
        }
    }

private:
    bool compatible(int a, int b) const {
        return !prune_mixed || labels[static_cast<std::size_t>(a)] == labels[static_cast<std::size_t>(b)];
    }
    int mixed(int a, int b) const {
        return labels.empty() ? 0
                              : labels[static_cast<std::size_t>(a)] != labels[static_cast<std::size_t>(b)];
    }
    void pair_legs(int a, int b) {
        alpha[static_cast<std::size_t>(a)] = b;
        alpha[static_cast<std::size_t>(b)] = a;
        paired[static_cast<std::size_t>(a)] = paired[static_cast<std::size_t>(b)] = 1;
    }
    void unpair_legs(int a, int b) {
        paired[static_cast<std::size_t>(a)] = paired[static_cast<std::size_t>(b)] = 0;
    }

    void recurse(int done, int mixed_so_far) {
        const int m = static_cast<int>(gamma.size());
        if (done == m) {
            ++counts[{count_loops(gamma, alpha), mixed_so_far}];
            return;
        }
        int a = 0;
        while (paired[static_cast<std::size_t>(a)]) ++a;
        paired[static_cast<std::size_t>(a)] = 1;
        for (int b = a + 1; b < m; ++b) {
            if (paired[static_cast<std::size_t>(b)] || !compatible(a, b)) continue;
            alpha[static_cast<std::size_t>(a)] = b;
            alpha[static_cast<std::size_t>(b)] = a;
            paired[static_cast<std::size_t>(b)] = 1;
            recurse(done + 2, mixed_so_far + mixed(a, b));
            paired[static_cast<std::size_t>(b)] = 0;
        }
        paired[static_cast<std::size_t>(a)] = 0;
    }
};

CensusMap enumerate_pairings(const TraceMonomial& spec, const MomentOptions& opts,
                             bool prune_mixed) {
    const int m = spec.total_legs();
    Int total = double_factorial(m - 1);
    if (total > opts.pairing_budget)
        throw CapExceeded("pairing count " + total.str() + " exceeds budget " +
                          std::to_string(opts.pairing_budget));

    auto gamma = gamma_of(spec.trace_sizes());
    std::vector<char> labels;
    if (!spec.single_matrix()) {
        auto l = spec.leg_labels();
        labels.assign(l.begin(), l.end());
    }
    if (labels.empty()) prune_mixed = false; // one label: nothing to prune

    unsigned want = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (want == 0) want = 1;
    unsigned threads = std::min<unsigned>(want, static_cast<unsigned>(std::max(1, m - 1)));

    std::vector<EnumTask> tasks;
    tasks.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        tasks.push_back(EnumTask{gamma, labels, prune_mixed, {}, {}, {}});

    if (threads == 1) {
        tasks[0].run(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] { tasks[t].run(static_cast<int>(t), static_cast<int>(threads)); });
        for (auto& th : pool) th.join();
    }

    CensusMap merged;
    for (const auto& task : tasks)
        for (const auto& [cell, n] : task.counts) merged[cell] += n;
    return merged;
}

using MemoKey = std::vector<int>; // ascending trace sizes

NPolynomial recursive_moment(MemoKey key, std::map<MemoKey, NPolynomial>& memo,
                             const MomentOptions& opts) {
    if (key.empty()) return NPolynomial(Rational(1));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (memo.size() >= opts.memo_budget)
        throw CapExceeded("moment recursion memo exceeds budget " +
                          std::to_string(opts.memo_budget));

    const int n = key.back();
    MemoKey rest(key.begin(), key.end() - 1);

    auto insert_sorted = [](MemoKey k, int v) {
        k.insert(std::upper_bound(k.begin(), k.end(), v), v);
        return k;
    };

    NPolynomial result;
    // split: resolve the first leg of the largest trace against a leg of the
    // same trace; tr M^0 factors contribute N each
    for (int j = 0; j + 2 <= n; ++j) {
        int a = j, b = n - 2 - j;
        MemoKey next = rest;
        unsigned empties = 0;
        for (int part : {a, b}) {
            if (part == 0)
                ++empties;
            else
                next = insert_sorted(next, part);
        }
        result += recursive_moment(next, memo, opts).shifted(empties);
    }
    // merge: resolve it against a leg of another trace of size s (s choices)
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (i > 0 && rest[i] == rest[i - 1]) continue; // group equal sizes
        int s = rest[i];
        int mult = static_cast<int>(std::count(rest.begin(), rest.end(), s));
        MemoKey next;
        next.reserve(rest.size());
        bool removed = false;
        for (int v : rest) {
            if (!removed && v == s) {
                removed = true;
                continue;
            }
            next.push_back(v);
        }
        int merged_size = n + s - 2;
        NPolynomial sub = merged_size == 0
                              ? recursive_moment(next, memo, opts).shifted(1)
                              : recursive_moment(insert_sorted(next, merged_size), memo, opts);
        result += sub * Rational(s * mult);
    }

    memo.emplace(std::move(key), result);
    return result;
}

void require_single_matrix(const TraceMonomial& spec, const char* op) {
    if (!spec.single_matrix())
        throw Unsupported(std::string(op) + " requires a single-matrix monomial");
}

} // namespace

NPolynomial wick_moment_bruteforce(const TraceMonomial& spec, const MomentOptions& opts) {
    require_single_matrix(spec, "wick_moment_bruteforce");
    if (spec.total_legs() % 2 != 0) return NPolynomial{};
    NPolynomial out;
    for (const auto& [cell, n] : enumerate_pairings(spec, opts, false))
        out.add(static_cast<unsigned>(cell.first), Rational(n));
    return out;
}

NPolynomial wick_moment_recursive(const TraceMonomial& spec, const MomentOptions& opts) {
    require_single_matrix(spec, "wick_moment_recursive");
    if (spec.total_legs() % 2 != 0) return NPolynomial{};
    MemoKey key = spec.trace_sizes();
    std::sort(key.begin(), key.end());
    std::map<MemoKey, NPolynomial> memo;
    return recursive_moment(std::move(key), memo, opts);
}

Rational replica_coefficient(const TraceMonomial& spec, const MomentOptions& opts) {
    return wick_moment_recursive(spec, opts).coefficient(1);
}

Rational link_coefficient(const TraceMonomial& spec, unsigned order, const MomentOptions& opts) {
    return wick_moment_recursive(spec, opts).coefficient(order);
}

NPolynomial coupled_moment(const TraceMonomial& spec, const Rational& c,
                           const MomentOptions& opts) {
    if (c * c == 1) throw InvalidCoupling("coupling c with c^2 = 1 is singular");
    if (spec.total_legs() % 2 != 0) return NPolynomial{};

    auto census = enumerate_pairings(spec, opts, c == 0);
    const int pairs = spec.total_legs() / 2;
    const Rational norm = pow_rational(1 - c * c, static_cast<unsigned>(pairs));

    NPolynomial out;
    for (const auto& [cell, n] : census) {
        auto [loops, mixed] = cell;
        Rational weight = pow_rational(c, static_cast<unsigned>(mixed)) / norm;
        out.add(static_cast<unsigned>(loops), weight * Rational(n));
    }
    return out;
}

std::map<unsigned, Int> diagram_census(const TraceMonomial& spec, const MomentOptions& opts) {
    require_single_matrix(spec, "diagram_census");
    if (spec.total_legs() % 2 != 0) return {};
    std::map<unsigned, Int> out;
    for (const auto& [cell, n] : enumerate_pairings(spec, opts, false))
        out[static_cast<unsigned>(cell.first)] += n;
    return out;
}

} // namespace knotmat
