#include <benchmark/benchmark.h>

#include <random>

#include "stellar/classify.hpp"
#include "stellar/depressed.hpp"
#include "stellar/measure.hpp"

using namespace stellar;

namespace {

SymmetricState random_state(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<Complex> c(n + 1);
    for (auto& x : c) x = Complex{dist(rng), dist(rng)};
    return normalize(SymmetricState(n, std::move(c)));
}

void BM_FindRoots(benchmark::State& state) {
    std::mt19937_64 rng(1);
    int n = static_cast<int>(state.range(0));
    auto s = random_state(rng, n);
    auto poly = to_polynomial(s);
    for (auto _ : state) benchmark::DoNotOptimize(find_roots(poly));
}
BENCHMARK(BM_FindRoots)->Arg(3)->Arg(5)->Arg(7)->Arg(10);

void BM_Classify(benchmark::State& state) {
    std::mt19937_64 rng(2);
    int n = static_cast<int>(state.range(0));
    auto s = random_state(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(classify_state(s));
}
BENCHMARK(BM_Classify)->Arg(3)->Arg(4);

void BM_Measure(benchmark::State& state) {
    std::mt19937_64 rng(3);
    int n = static_cast<int>(state.range(0));
    auto s = random_state(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(measure_state(s));
}
BENCHMARK(BM_Measure)->Arg(3)->Arg(4);

void BM_Symmetrize(benchmark::State& state) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> uz(-1.0, 1.0), ua(0.0, 6.28);
    int n = static_cast<int>(state.range(0));
    std::vector<Spinor> spinors;
    for (int i = 0; i < n; ++i) spinors.push_back(Spinor::canonical(ua(rng), std::acos(uz(rng))));
    for (auto _ : state) benchmark::DoNotOptimize(symmetrize_spinors(spinors));
}
BENCHMARK(BM_Symmetrize)->Arg(4)->Arg(8);

void BM_Compress(benchmark::State& state) {
    std::mt19937_64 rng(5);
    auto s = random_state(rng, 4);
    for (auto _ : state) benchmark::DoNotOptimize(compress_state(s));
}
BENCHMARK(BM_Compress);

}  // namespace

BENCHMARK_MAIN();
