#include <benchmark/benchmark.h>

#include "stacky/counting.hpp"

namespace {

// range(0) = q, range(1) = d1 + d2 split evenly
void BM_Poly1Enumerate(benchmark::State& state) {
  const stacky::Field f = stacky::make_field(static_cast<std::uint64_t>(state.range(0)));
  const auto total = static_cast<std::uint64_t>(state.range(1));
  std::uint64_t tuples = 1;
  for (std::uint64_t i = 0; i < total; ++i) tuples *= f.size();
  for (auto _ : state) {
    benchmark::DoNotOptimize(stacky::count_poly1_enumerate(total / 2, total - total / 2, f));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * tuples));
}
BENCHMARK(BM_Poly1Enumerate)->Args({2, 12})->Args({3, 8})->Args({5, 6})->Args({7, 5})->Unit(benchmark::kMillisecond);

void BM_Poly1ExtensionField(benchmark::State& state) {
  const stacky::Field f = stacky::make_field(3, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stacky::count_poly1_enumerate(2, 2, f));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * f.size() * f.size() * f.size() * f.size()));
}
BENCHMARK(BM_Poly1ExtensionField)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CountT(benchmark::State& state) {
  const stacky::StackParams params(1, 2, 1);
  const stacky::Field f = stacky::make_field(static_cast<std::uint64_t>(state.range(0)));
  const stacky::EnumerationOptions opts{stacky::kDefaultEnumerationBudget, static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(stacky::count_T_enumerate(params, f, opts));
}
BENCHMARK(BM_CountT)->Args({7, 1})->Args({7, 2})->Args({11, 1})->Unit(benchmark::kMillisecond);

void BM_Orbits(benchmark::State& state) {
  const stacky::StackParams params(2, 3, 1);
  const stacky::Field f = stacky::make_field(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stacky::weighted_count_from_orbits(params, f).weighted_total);
}
BENCHMARK(BM_Orbits)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
