#include "cpsurgery/forgetful.hpp"
#include "cpsurgery/kerj.hpp"
#include "cpsurgery/obstruction.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cpsurgery;

static void BM_HnfRandom(benchmark::State& state)
{
    const int r = static_cast<int>(state.range(0));
    std::mt19937 rng(1);
    std::uniform_int_distribution<long> d(-100000, 100000);
    IntColumns gens(static_cast<size_t>(2 * r), IntVector(static_cast<size_t>(r)));
    for (auto& c : gens)
        for (auto& x : c)
            x = d(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(hnf_columns(gens, r));
}
BENCHMARK(BM_HnfRandom)->Arg(4)->Arg(9)->Arg(16);

static void BM_KernelLattice(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int l = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(kerj_lattice(n, l));
}
BENCHMARK(BM_KernelLattice)->Args({17, 1})->Args({18, 2})->Args({17, 3})->Args({4, 15});

static void BM_CanonicalGenerators(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_generators(n, 1));
}
BENCHMARK(BM_CanonicalGenerators)->Arg(5)->Arg(17);

static void BM_ObstructionForm(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int l = static_cast<int>(state.range(1));
    auto gens = canonical_generators(n, l);
    for (auto _ : state)
        benchmark::DoNotOptimize(obstruction_form(n, l, gens));
}
BENCHMARK(BM_ObstructionForm)->Args({17, 1})->Args({18, 2})->Args({17, 3});

static void BM_Congruences(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(congruences(6, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Congruences)->DenseRange(1, 3);
BENCHMARK_MAIN();
