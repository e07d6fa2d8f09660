#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "stacky/poly.hpp"

namespace {

std::vector<stacky::Polynomial> random_polys(const stacky::Field& f, std::size_t degree, std::size_t count) {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::uint32_t> elem(0, f.size() - 1);
  std::vector<stacky::Polynomial> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<stacky::FieldElement> c(degree + 1);
    for (auto& x : c) x = stacky::FieldElement{elem(rng)};
    c.back() = f.one();
    out.emplace_back(f, std::move(c));
  }
  return out;
}

template <auto Resultant>
void BM_Resultant(benchmark::State& state) {
  const stacky::Field f = stacky::make_field(static_cast<std::uint64_t>(state.range(0)),
                                             static_cast<std::uint32_t>(state.range(1)));
  const auto polys = random_polys(f, static_cast<std::size_t>(state.range(2)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Resultant(polys[i % 64], polys[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK_TEMPLATE(BM_Resultant, stacky::resultant_sylvester)->Args({5, 1, 4})->Args({5, 1, 12})->Args({3, 2, 8});
BENCHMARK_TEMPLATE(BM_Resultant, stacky::resultant_euclid)->Args({5, 1, 4})->Args({5, 1, 12})->Args({3, 2, 8});

void BM_Gcd(benchmark::State& state) {
  const stacky::Field f = stacky::make_field(7);
  const auto polys = random_polys(f, static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stacky::gcd(polys[i % 64], polys[(i + 3) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Gcd)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
