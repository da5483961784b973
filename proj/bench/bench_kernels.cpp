// Serial reference vs OpenMP kernels: exact search and corpus canonicalization.
#include <benchmark/benchmark.h>

#include "cfc/enumerate.hpp"
#include "cfc/families.hpp"
#include "cfc/solver.hpp"

namespace {

void BM_ExactCfc(benchmark::State& state) {
    const auto g = cfc::h_family(static_cast<int>(state.range(0)));
    cfc::SolveOptions opts;
    opts.parallel = state.range(1) != 0;
    for (auto _ : state) {
        auto r = cfc::exact_cfc(g, 2, 3, opts);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_ExactCfc)->ArgsProduct({{3, 4}, {0, 1}})->ArgNames({"l", "omp"})->Unit(benchmark::kMillisecond);

void BM_ExactVcfc(benchmark::State& state) {
    const auto g = cfc::figure1_graph();
    cfc::SolveOptions opts;
    opts.parallel = state.range(0) != 0;
    for (auto _ : state) {
        auto r = cfc::exact_vcfc(g, 2, 4, opts);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_ExactVcfc)->Arg(0)->Arg(1)->ArgName("omp")->Unit(benchmark::kMillisecond);

void BM_ConnectedGraphs(benchmark::State& state) {
    const bool parallel = state.range(1) != 0;
    for (auto _ : state) {
        auto corpus = cfc::connected_graphs(static_cast<int>(state.range(0)), parallel);
        benchmark::DoNotOptimize(corpus.size());
    }
}
BENCHMARK(BM_ConnectedGraphs)->ArgsProduct({{6, 7}, {0, 1}})->ArgNames({"n", "omp"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
