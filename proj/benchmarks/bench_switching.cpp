#include <benchmark/benchmark.h>

#include "eisenspec/census.hpp"
#include "eisenspec/switching.hpp"
#include "fixtures.hpp"

using namespace eisenspec;

static void BM_NormalizeTree(benchmark::State& state) {
    const auto phi = bench::random_digraph(static_cast<int>(state.range(0)), 0.4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(normalize_tree(phi));
}
BENCHMARK(BM_NormalizeTree)->Arg(10)->Arg(100);

static void BM_CanonicalForm(benchmark::State& state) {
    const auto phi = bench::random_digraph(static_cast<int>(state.range(0)), 0.5, 5);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(phi));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(9)->Arg(12);

// Relabeled and switched copy: the search has to find the witness.
static void BM_SwitchingIsomorphicHit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto phi = bench::random_digraph(n, 0.5, 6);
    std::vector<int> reversed(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) reversed[static_cast<std::size_t>(i)] = n - 1 - i;
    SwitchingFunction x = SwitchingFunction::identity(n);
    for (int i = 0; i < n; ++i) x.x[static_cast<std::size_t>(i)] = Unit(i);
    const auto psi = apply_switch(relabel(phi, reversed), x);
    for (auto _ : state) benchmark::DoNotOptimize(switching_isomorphic(phi, psi));
}
BENCHMARK(BM_SwitchingIsomorphicHit)->Arg(8)->Arg(16)->Arg(32);

// Cospectral twin expansions that are not switching isomorphic, orders 24 and 195.
static void BM_SwitchingIsomorphicFamilyPair(benchmark::State& state) {
    const auto [a, b] = known_family(KnownFamily::Family65, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(switching_isomorphic(a, b));
}
BENCHMARK(BM_SwitchingIsomorphicFamilyPair)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
