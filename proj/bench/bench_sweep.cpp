// Serial reference kernel against the OpenMP kernel on the same sweeps.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "rigid/search.hpp"

namespace {

rigid::SearchSpec workload(int which) {
  rigid::SearchSpec s;
  switch (which) {
    case 0:  // two fixed points, six-dimensional
      s.m = 2, s.n = 3, s.bound = 5, s.mode = rigid::Mode::T;
      break;
    case 1:  // three fixed points, L mode
      s.m = 3, s.n = 2, s.bound = 8, s.mode = rigid::Mode::L;
      break;
    default:  // three fixed points, T mode
      s.m = 3, s.n = 2, s.bound = 3, s.mode = rigid::Mode::T;
      break;
  }
  s.budget.max_candidates = 1'000'000'000;
  s.budget.max_exact_checks = 10'000'000;
  return s;
}

void BM_SweepSerial(benchmark::State& state) {
  const rigid::SearchSpec spec = workload(static_cast<int>(state.range(0)));
  std::uint64_t candidates = 0;
  for (auto _ : state) {
    rigid::SearchReport r = rigid::sweep_serial(spec);
    candidates = r.stats.candidates;
    benchmark::DoNotOptimize(r.found.data());
  }
  state.counters["candidates/s"] = benchmark::Counter(static_cast<double>(candidates), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_SweepParallel(benchmark::State& state) {
  const rigid::SearchSpec spec = workload(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  std::uint64_t candidates = 0;
  for (auto _ : state) {
    rigid::SearchReport r = rigid::sweep_parallel(spec, threads);
    candidates = r.stats.candidates;
    benchmark::DoNotOptimize(r.found.data());
  }
  state.counters["candidates/s"] = benchmark::Counter(static_cast<double>(candidates), benchmark::Counter::kIsIterationInvariantRate);
}

void parallel_args(benchmark::internal::Benchmark* b) {
  const int max_threads = omp_get_max_threads();
  for (int w = 0; w < 3; ++w) {
    for (int t = 1; t <= max_threads; t *= 2) b->Args({w, t});
    if ((max_threads & (max_threads - 1)) != 0) b->Args({w, max_threads});
  }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
