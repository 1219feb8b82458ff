// Serial reference kernels against their OpenMP twins. The second argument
// of every parallel benchmark is the worker count. Times are wall clock
// because CPU time only covers the calling thread.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cpairs/kernels.hpp"

using namespace cpairs::kernels;

namespace {

std::vector<std::uint8_t> indicator(std::size_t size) {
  std::mt19937_64 rng(1);
  std::bernoulli_distribution pick(0.4);
  std::vector<std::uint8_t> out(size);
  for (auto& x : out) x = pick(rng) ? 1 : 0;
  return out;
}

SubsetProblem problem(int items) {
  std::mt19937_64 rng(2);
  std::bernoulli_distribution edge(0.3);
  SubsetProblem p;
  p.adjacency.assign(static_cast<std::size_t>(items), 0);
  p.weight.assign(static_cast<std::size_t>(items), 0);
  for (int i = 0; i < items; ++i) {
    p.weight[static_cast<std::size_t>(i)] = std::uniform_int_distribution<std::int64_t>(0, 20)(rng);
    for (int j = i + 1; j < items; ++j)
      if (edge(rng)) {
        p.adjacency[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        p.adjacency[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
  }
  return p;
}

void BM_CompTransformSerial(benchmark::State& state) {
  const Grid grid{static_cast<int>(state.range(0)), 2};
  const auto ind = indicator(grid.size());
  for (auto _ : state) benchmark::DoNotOptimize(comp_transform_serial(ind, grid));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * grid.size()));
}

void BM_CompTransformParallel(benchmark::State& state) {
  const Grid grid{static_cast<int>(state.range(0)), 2};
  const auto ind = indicator(grid.size());
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(comp_transform_parallel(ind, grid, workers));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * grid.size()));
}

void BM_DegreesSerial(benchmark::State& state) {
  const Grid grid{static_cast<int>(state.range(0)), 2};
  const auto ind = indicator(grid.size());
  for (auto _ : state) benchmark::DoNotOptimize(degrees_serial(ind, grid));
}

void BM_DegreesParallel(benchmark::State& state) {
  const Grid grid{static_cast<int>(state.range(0)), 2};
  const auto ind = indicator(grid.size());
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(degrees_parallel(ind, grid, workers));
}

void BM_SubsetScanSerial(benchmark::State& state) {
  const auto p = problem(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subset_scan_serial(p));
}

void BM_SubsetScanParallel(benchmark::State& state) {
  const auto p = problem(static_cast<int>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(subset_scan_parallel(p, workers));
}

}  // namespace

BENCHMARK(BM_CompTransformSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CompTransformParallel)->ArgsProduct({{10, 12}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DegreesSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DegreesParallel)->ArgsProduct({{10, 12}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SubsetScanSerial)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SubsetScanParallel)->ArgsProduct({{20, 24}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
