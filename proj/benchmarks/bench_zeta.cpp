#include <benchmark/benchmark.h>

#include "stacky/cohomology.hpp"
#include "stacky/zeta.hpp"

namespace {

void BM_SeriesFromCounts(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto counts = stacky::hom_stack_counts(stacky::StackParams(4, 6, 1), 5, order);
  for (auto _ : state) benchmark::DoNotOptimize(stacky::zeta_series_from_counts(counts, order));
}
BENCHMARK(BM_SeriesFromCounts)->Arg(4)->Arg(8)->Arg(16);

void BM_ExpandRational(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto function = stacky::zeta_rational_from_table(
      stacky::hom_stack_table(stacky::StackParams(4, 6, 2), stacky::CohomologyKind::Compact), 25);
  for (auto _ : state) benchmark::DoNotOptimize(stacky::expand_rational(function, order));
}
BENCHMARK(BM_ExpandRational)->Arg(8)->Arg(16);

void BM_VerifyZeta(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(stacky::verify_zeta(stacky::StackParams(4, 6, 1), 5, stacky::kDefaultZetaOrder));
  }
}
BENCHMARK(BM_VerifyZeta);

}  // namespace

BENCHMARK_MAIN();
