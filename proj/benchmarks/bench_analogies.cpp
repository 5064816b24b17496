#include <benchmark/benchmark.h>

#include <random>

#include "qgraph/analogies.hpp"

namespace {

using namespace qgraph;

ComplexMatrix random_square(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = {normal(rng), normal(rng)};
  return a;
}

void BM_Permanent(benchmark::State& state) {
  const auto a = random_square(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(a));
}
BENCHMARK(BM_Permanent)->DenseRange(2, 12, 2);

void BM_CoatesDeterminant(benchmark::State& state) {
  const auto a = random_square(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(coates_determinant(a));
}
BENCHMARK(BM_CoatesDeterminant)->DenseRange(2, 10, 2);

}  // namespace
