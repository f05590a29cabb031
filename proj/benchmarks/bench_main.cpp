#include <benchmark/benchmark.h>

#include <knotmat/bands.hpp>
#include <knotmat/exactmoments.hpp>
#include <knotmat/genfunc.hpp>
#include <knotmat/knotpoly.hpp>
#include <knotmat/seifert.hpp>
#include <knotmat/zeros.hpp>

#include <vector>

namespace {

knotmat::LadderDiagram two_strand_ladder(unsigned rungs) {
    std::vector<knotmat::Rung> rs;
    for (unsigned i = 0; i < rungs; ++i) rs.push_back({1, i + 1});
    return knotmat::LadderDiagram(2, std::move(rs));
}

void BM_WickBruteForce(benchmark::State& state) {
    const auto spec = knotmat::TraceMonomial::parse("6,4");
    for (auto _ : state) benchmark::DoNotOptimize(knotmat::wick_moment_bruteforce(spec));
}
BENCHMARK(BM_WickBruteForce);

void BM_WickRecursive(benchmark::State& state) {
    const auto spec = knotmat::TraceMonomial::parse("6,4,2");
    for (auto _ : state) benchmark::DoNotOptimize(knotmat::wick_moment_recursive(spec));
}
BENCHMARK(BM_WickRecursive);

void BM_ReplicaSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(knotmat::replica_generating_series(3, 16));
}
BENCHMARK(BM_ReplicaSeries);

void BM_KauffmanBracket(benchmark::State& state) {
    const auto d = knotmat::braid_closure({1, -2, 1, -2, 1, -2, 1, -2, 1, -2, 1, -2});
    knotmat::BracketOptions opts;
    opts.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(knotmat::kauffman_bracket(d, opts));
}
BENCHMARK(BM_KauffmanBracket);

void BM_LadderCensus(benchmark::State& state) {
    const auto d = two_strand_ladder(static_cast<unsigned>(state.range(0)));
    knotmat::CensusOptions opts;
    opts.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(knotmat::enumerate_assignments(d, opts));
}
BENCHMARK(BM_LadderCensus)->Arg(8)->Arg(12);

void BM_AlexanderRecursive(benchmark::State& state) {
    const auto g = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(knotmat::alexander_trivalent_recursive(g));
}
BENCHMARK(BM_AlexanderRecursive)->Arg(20)->Arg(500);

void BM_ZeroSweep(benchmark::State& state) {
    const auto gmax = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(knotmat::trivalent_zero_sweep(gmax));
}
BENCHMARK(BM_ZeroSweep)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
