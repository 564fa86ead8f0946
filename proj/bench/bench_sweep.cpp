#include <benchmark/benchmark.h>

#include "flagdeg/sweep.hpp"

using namespace flagdeg;

namespace {

SweepOptions options(int n, int jobs) {
  SweepOptions o;
  o.jobs = jobs;
  o.max_n = n;
  return o;
}

void BM_SweepSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto o = options(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(n, o));
}

void BM_SweepParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto o = options(n, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(n, o));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->ArgsProduct({{4, 5, 6}, {1, 2, 4, 8}})->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
