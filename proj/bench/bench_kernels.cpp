#include <benchmark/benchmark.h>

#include "branchloci/oracle.hpp"
#include "branchloci/sweep.hpp"

using namespace branchloci;

static void BM_LocusSerial(benchmark::State& state) {
    auto grid = valid_region_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_locus_serial(grid));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_LocusSerial)->Arg(20)->Arg(100);

static void BM_LocusParallel(benchmark::State& state) {
    auto grid = valid_region_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_locus(grid));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_LocusParallel)->Arg(20)->Arg(100)->UseRealTime();

static void BM_ComposeSerial(benchmark::State& state) {
    auto sets = oracle::enumerate(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(compose_sweep_serial(sets));
}
BENCHMARK(BM_ComposeSerial)->Arg(8)->Arg(12);

static void BM_ComposeParallel(benchmark::State& state) {
    auto sets = oracle::enumerate(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(compose_sweep(sets));
}
BENCHMARK(BM_ComposeParallel)->Arg(8)->Arg(12)->UseRealTime();

BENCHMARK_MAIN();
