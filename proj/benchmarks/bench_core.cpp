#include <benchmark/benchmark.h>

#include <random>

#include "cauchon/counting.hpp"
#include "cauchon/diagram.hpp"
#include "cauchon/strata.hpp"
#include "cauchon/weyl.hpp"

using namespace cauchon;

static void BM_KernelDimSkew(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> val(-1, 1);
    SkewIntMatrix s(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            s.set(i, j, val(rng));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_dim(s));
}
BENCHMARK(BM_KernelDimSkew)->RangeMultiplier(2)->Range(4, 64);

static void BM_StratumDimAllWhite(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto c = CauchonDiagram::all_white(n, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(stratum_dim(c));
}
BENCHMARK(BM_StratumDimAllWhite)->DenseRange(2, 8, 2);

static void BM_Enumerate(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    std::uint64_t total = 0;
    for (auto _ : state) {
        total = enumerated_count(m, n);
        benchmark::DoNotOptimize(total);
    }
    state.counters["diagrams/s"] =
        benchmark::Counter(static_cast<double>(total), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_Enumerate)->Args({4, 4})->Args({5, 5})->Args({2, 12})->Unit(benchmark::kMillisecond);

static void BM_DimDistribution(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const auto jobs = static_cast<unsigned>(state.range(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(dim_distribution(m, n, {.jobs = jobs}));
}
BENCHMARK(BM_DimDistribution)
    ->Args({4, 4, 1})
    ->Args({5, 5, 1})
    ->Args({2, 10, 1})
    ->Args({2, 10, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_BuildChain(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto c = CauchonDiagram::all_white(n, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_chain(c));
}
BENCHMARK(BM_BuildChain)->DenseRange(2, 6, 2);

static void BM_ReducedWords(benchmark::State& state) {
    const auto rs = RootSystemData::parse(state.range(0) == 0 ? "A3" : "B3");
    for (auto _ : state)
        benchmark::DoNotOptimize(reduced_words_by_element(rs));
}
BENCHMARK(BM_ReducedWords)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
