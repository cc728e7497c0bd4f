#include "pert/graphs.hpp"
#include "pert/tropical.hpp"

#include <benchmark/benchmark.h>

namespace {

// F_{n,k} has C(n,k) terms and C(C(n,k),2) pairwise feasibility tests.
void BM_AdjacencySerial(benchmark::State& state) {
    auto f = pert::gen_fnk(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(pert::adjacency_graph(f, pert::Execution::Serial));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(f.size() * (f.size() - 1) / 2));
}

void BM_AdjacencyParallel(benchmark::State& state) {
    auto f = pert::gen_fnk(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(pert::adjacency_graph(f, pert::Execution::Parallel));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(f.size() * (f.size() - 1) / 2));
}

void BM_NewtonSerial(benchmark::State& state) {
    auto f = pert::gen_fnk(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(pert::newton_skeleton(f, pert::Execution::Serial));
}

void BM_NewtonParallel(benchmark::State& state) {
    auto f = pert::gen_fnk(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(pert::newton_skeleton(f, pert::Execution::Parallel));
}

} // namespace

BENCHMARK(BM_AdjacencySerial)->Args({6, 3})->Args({7, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdjacencyParallel)->Args({6, 3})->Args({7, 3})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_NewtonSerial)->Args({6, 3})->Args({7, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NewtonParallel)->Args({6, 3})->Args({7, 3})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
