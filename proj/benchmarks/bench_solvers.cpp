#include <benchmark/benchmark.h>

#include "sqwell/apps.hpp"

using namespace sqwell;

static void BM_SolveBranch(benchmark::State& state) {
  const BranchId b = BranchId::from_global(static_cast<int>(state.range(0)));
  const double p = 0.5 * std::min(bracket_for(b).existence_bound, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_branch(b, p));
}
BENCHMARK(BM_SolveBranch)->Arg(1)->Arg(2)->Arg(8)->Arg(40);

static void BM_Spectrum(benchmark::State& state) {
  const auto d = DimensionlessStrength::from_P(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_spectrum(d));
}
BENCHMARK(BM_Spectrum)->Arg(3)->Arg(30)->Arg(300);

static void BM_Approximation(benchmark::State& state, const char* method) {
  const MethodTag tag = MethodTag::parse(method);
  const BranchId b{Family::Zeta, 3};
  for (auto _ : state) benchmark::DoNotOptimize(approximate(b, 0.05, tag));
}
BENCHMARK_CAPTURE(BM_Approximation, sp, "sp");
BENCHMARK_CAPTURE(BM_Approximation, ip, "ip");
BENCHMARK_CAPTURE(BM_Approximation, cubic, "cubic");
BENCHMARK_CAPTURE(BM_Approximation, barker, "barker");
BENCHMARK_CAPTURE(BM_Approximation, series16, "series16");

static void BM_CountRefined(benchmark::State& state) {
  const auto d = DimensionlessStrength::from_P(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_bound_states(d, CountMode::Refined));
}
BENCHMARK(BM_CountRefined)->Arg(10)->Arg(1000);

static void BM_BoundStates(benchmark::State& state) {
  const WellSpec w = WellSpec::reduced(10.0);
  for (auto _ : state) benchmark::DoNotOptimize(build_bound_states(w));
}
BENCHMARK(BM_BoundStates);

static void BM_FilmReport(benchmark::State& state) {
  const std::vector<MethodTag> methods = {MethodTag::parse("exact"), MethodTag::parse("cubic"),
                                          MethodTag::parse("barker")};
  for (auto _ : state) benchmark::DoNotOptimize(film_subbands({4.0, 5.0, 2.0}, methods));
}
BENCHMARK(BM_FilmReport);
