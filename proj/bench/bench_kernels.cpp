#include <benchmark/benchmark.h>

#include "linespace/constructions.hpp"
#include "linespace/metrizability.hpp"
#include "linespace/search.hpp"

using namespace linespace;

static void BM_ExhaustiveReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_m_reference(n, 3, Quantity::ClosureLines));
}
BENCHMARK(BM_ExhaustiveReference)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(exhaustive_m(n, 3, Quantity::ClosureLines, {threads, 8 * threads, false, -1}));
}
BENCHMARK(BM_ExhaustiveKernel)->Args({4, 1})->Args({5, 1})->Args({5, 2})->Args({5, 4})->Unit(benchmark::kMillisecond);

static void BM_ScanReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_scan_reference(ScanSource::Graphs, 5));
}
BENCHMARK(BM_ScanReference)->Unit(benchmark::kMillisecond);

static void BM_ScanKernel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_scan(ScanSource::Graphs, 5, {threads}));
}
BENCHMARK(BM_ScanKernel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_MetrizableReference(benchmark::State& state) {
  const Hypergraph h = associated_hypergraph(pentagon());
  for (auto _ : state) benchmark::DoNotOptimize(check_metrizable_reference(h));
}
BENCHMARK(BM_MetrizableReference)->Unit(benchmark::kMillisecond);

static void BM_MetrizablePruned(benchmark::State& state) {
  const Hypergraph h = associated_hypergraph(pentagon());
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_metrizable(h, {12, threads}));
}
BENCHMARK(BM_MetrizablePruned)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
