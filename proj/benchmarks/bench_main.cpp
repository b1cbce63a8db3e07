#include <benchmark/benchmark.h>

#include "flagcodes/bounds.hpp"
#include "flagcodes/constructions.hpp"
#include "flagcodes/search.hpp"

using namespace flagcodes;

static void BM_EnumerateGrassmannian_5_2_q2(benchmark::State& state) {
    Field F = make_field(2);
    for (auto _ : state) {
        std::size_t n = 0;
        for_each_subspace(F, 5, 2, [&](const Subspace&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_EnumerateGrassmannian_5_2_q2);

static void BM_EnumerateFullFlags_4_q2(benchmark::State& state) {
    Field F = make_field(2);
    for (auto _ : state) {
        std::size_t n = 0;
        for_each_flag(4, F, FlagType::full(4), [&](const Flag&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_EnumerateFullFlags_4_q2);

static void BM_PairwiseDistance_315(benchmark::State& state) {
    Field F = make_field(2);
    auto flags = enumerate_flags(4, F, FlagType::full(4));
    for (auto _ : state) {
        std::size_t acc = 0;
        for (std::size_t i = 0; i < flags.size(); ++i)
            for (std::size_t j = i + 1; j < flags.size(); ++j)
                acc += grassmann_distance(flags[i], flags[j]);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_PairwiseDistance_315);

static void BM_ComputeR_7(benchmark::State& state) {
    for (auto _ : state) {
        auto R = compute_R(7, 6, FlagType::full(7));
        benchmark::DoNotOptimize(R.size());
    }
}
BENCHMARK(BM_ComputeR_7);

static void BM_BestUpperBoundRow6(benchmark::State& state) {
    for (auto _ : state) {
        BigInt acc = 0;
        for (std::uint32_t d = 1; d <= 9; ++d) acc += best_upper_bound(6, d, 2).value;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_BestUpperBoundRow6);

static void BM_SolveFullFlags_3_2_q2(benchmark::State& state) {
    for (auto _ : state) {
        KramerMesnerSystem sys = unreduced_system(3, 2, 2, FlagType::full(3));
        SolveBudget budget;
        SolveReport rep = solve(sys, budget);
        benchmark::DoNotOptimize(rep.best_value);
    }
}
BENCHMARK(BM_SolveFullFlags_3_2_q2);

static void BM_Fixture155MinDistance(benchmark::State& state) {
    FlagCode code = fixture_155();
    for (auto _ : state) {
        auto md = min_distance(code);
        benchmark::DoNotOptimize(md.distance);
    }
}
BENCHMARK(BM_Fixture155MinDistance);

BENCHMARK_MAIN();
