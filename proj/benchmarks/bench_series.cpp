#include <benchmark/benchmark.h>

#include "sqwell/series.hpp"

using namespace sqwell;

static void BM_GenerateTable(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_q_table(order));
}
BENCHMARK(BM_GenerateTable)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_EvaluateSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const BranchId b{Family::Xi, 2};
  default_table();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_series_at(b, 0.02, order));
}
BENCHMARK(BM_EvaluateSeries)->Arg(3)->Arg(16);

static void BM_OdeContinue(benchmark::State& state) {
  const BranchId b{Family::Zeta, 1};
  const OdeOptions options{static_cast<int>(state.range(0)), 1e-12};
  for (auto _ : state) benchmark::DoNotOptimize(ode_continue(b, 0.5, options));
  state.counters["steps"] = last_ode_step_count();
}
BENCHMARK(BM_OdeContinue)->Arg(4)->Arg(8)->Arg(16);
