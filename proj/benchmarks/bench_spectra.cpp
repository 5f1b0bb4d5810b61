#include <benchmark/benchmark.h>

#include "eisenspec/sachs.hpp"
#include "eisenspec/spectra.hpp"
#include "fixtures.hpp"

using namespace eisenspec;

static void BM_CharPolyExact(benchmark::State& state) {
    const auto phi = bench::random_digraph(static_cast<int>(state.range(0)), 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly_exact(phi));
}
BENCHMARK(BM_CharPolyExact)->Arg(6)->Arg(10)->Arg(14)->Arg(24)->Arg(48)->Arg(96);

static void BM_CharPolyTraceRecursion(benchmark::State& state) {
    const auto phi = bench::random_digraph(static_cast<int>(state.range(0)), 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly_trace_recursion(phi));
}
BENCHMARK(BM_CharPolyTraceRecursion)->Arg(14)->Arg(24)->Arg(48)->Arg(96);

static void BM_CharPolyMultimodular(benchmark::State& state) {
    const auto phi = bench::random_digraph(static_cast<int>(state.range(0)), 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly_multimodular(phi));
}
BENCHMARK(BM_CharPolyMultimodular)->Arg(24)->Arg(48)->Arg(96)->Arg(192);

// Field-valued recursion over Q(omega), the slow reference route.
static void BM_CharPolyRationalMatrix(benchmark::State& state) {
    const auto m = eisenstein_matrix(bench::random_digraph(static_cast<int>(state.range(0)), 0.5, 1));
    for (auto _ : state) benchmark::DoNotOptimize(char_poly_exact(m));
}
BENCHMARK(BM_CharPolyRationalMatrix)->Arg(6)->Arg(10)->Arg(14);

static void BM_CharPolySachs(benchmark::State& state) {
    const auto phi = bench::random_digraph(static_cast<int>(state.range(0)), 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly_sachs(phi));
}
BENCHMARK(BM_CharPolySachs)->Arg(6)->Arg(8)->Arg(10);

static void BM_Inertia(benchmark::State& state) {
    const auto phi = bench::random_digraph(static_cast<int>(state.range(0)), 0.5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(inertia(phi));
}
BENCHMARK(BM_Inertia)->Arg(6)->Arg(14)->Arg(15)->Arg(32);

static void BM_TriangleCensus(benchmark::State& state) {
    const auto phi = bench::random_digraph(static_cast<int>(state.range(0)), 0.5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(triangle_census(phi));
}
BENCHMARK(BM_TriangleCensus)->Arg(16)->Arg(64);
