#include <benchmark/benchmark.h>

#include "eisenspec/census.hpp"
#include "eisenspec/expansions.hpp"
#include "eisenspec/named.hpp"
#include "eisenspec/spectra.hpp"

using namespace eisenspec;

static void BM_SignatureScanWithInertia(benchmark::State& state) {
    const UnderlyingGraph g = named::complete(static_cast<int>(state.range(0))).underlying();
    std::uint64_t visited = 0;
    for (auto _ : state) {
        SignatureEnumerator it(g);
        while (auto phi = it.next()) {
            benchmark::DoNotOptimize(inertia(*phi));
            ++visited;
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(visited));
}
BENCHMARK(BM_SignatureScanWithInertia)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_IsDesPruned(benchmark::State& state) {
    const SignedDigraph phi = clique_expand(named::path(3), {static_cast<int>(state.range(0)) - 2, 1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(is_des(phi, std::nullopt, 1));
}
BENCHMARK(BM_IsDesPruned)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_IsDesUnpruned(benchmark::State& state) {
    CensusTask task = CensusTask::for_target(named::gem());
    task.prune = false;
    task.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(cospectral_mates(task));
}
BENCHMARK(BM_IsDesUnpruned)->Unit(benchmark::kMillisecond);

static void BM_GraphSource(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(connected_graphs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GraphSource)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
