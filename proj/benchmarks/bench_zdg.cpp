#include "zdg/modring.hpp"
#include "zdg/spectra.hpp"
#include "zdg/wiener.hpp"
#include "zdg/zdgraph.hpp"

#include <benchmark/benchmark.h>

static void BM_CharpolyExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const zdg::IntMatrix m =
        zdg::adjacency_matrix(zdg::build_compressed_prime_power(n), true);
    for (auto _ : state) benchmark::DoNotOptimize(zdg::charpoly_exact(m));
}
BENCHMARK(BM_CharpolyExact)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Arg(96);

static void BM_ClosedFormCharpoly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zdg::closed_form_charpoly(n));
}
BENCHMARK(BM_ClosedFormCharpoly)->Arg(64)->Arg(256)->Arg(1024);

static void BM_SchurCheck(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const zdg::Rat lambda(3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(zdg::schur_check(n, lambda));
}
BENCHMARK(BM_SchurCheck)->Arg(8)->Arg(12)->Arg(24);

static void BM_WienerBfs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const zdg::ZdGraph g = zdg::build_compressed_prime_power(n);
    for (auto _ : state) benchmark::DoNotOptimize(zdg::wiener_index(g));
}
BENCHMARK(BM_WienerBfs)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

static void BM_AnnClasses(benchmark::State& state) {
    const std::int64_t m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(zdg::ann_classes(zdg::Modulus(m)));
}
BENCHMARK(BM_AnnClasses)->Arg(720720)->Arg(963761198400LL);

static void BM_BuildFullGraph(benchmark::State& state) {
    const std::int64_t m = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(zdg::build_full_graph(zdg::Modulus(m)));
}
BENCHMARK(BM_BuildFullGraph)->Arg(10'000)->Arg(100'000);

static void BM_BuildCompressedGraph(benchmark::State& state) {
    const std::int64_t m = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(zdg::build_compressed_graph(zdg::Modulus(m)));
}
BENCHMARK(BM_BuildCompressedGraph)->Arg(720720)->Arg(963761198400LL);

BENCHMARK_MAIN();
