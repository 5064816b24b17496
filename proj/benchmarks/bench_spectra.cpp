#include <benchmark/benchmark.h>

#include <random>

#include "qgraph/laplacians.hpp"
#include "qgraph/random_graphs.hpp"
#include "qgraph/spectra.hpp"

namespace {

using namespace qgraph;

void BM_HermitianEigen(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto k = laplacian(random_connected_graph(GraphKind::EdgeUnit, n, rng), MatrixFlavor::Combinatorial);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(k));
  state.SetComplexityN(n);
}
BENCHMARK(BM_HermitianEigen)->RangeMultiplier(2)->Range(4, 64)->Complexity(benchmark::oNCubed);

void BM_PathPredicate(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  RandomGraphOptions opts;
  opts.edge_probability = 0.3;
  const auto g = random_connected_graph(GraphKind::EdgeUnit, n, rng, opts);
  for (auto _ : state) benchmark::DoNotOptimize(zero_eig_path_predicate(g, MatrixFlavor::Combinatorial));
}
BENCHMARK(BM_PathPredicate)->DenseRange(4, 10, 2);

}  // namespace
