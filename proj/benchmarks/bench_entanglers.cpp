#include <benchmark/benchmark.h>

#include "qgraph/entanglers.hpp"

namespace {

using namespace qgraph;

void BM_SeparabilityExperiment(benchmark::State& state) {
  const auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(product_separability_experiment(trials, 42));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SeparabilityExperiment)->Arg(100)->Arg(500);

void BM_BellPairFromRecipe(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bell_pair_from_recipe(BellKind::PhiPlus, {0.3, 1.2}, {-2.0, 0.5}, {1.0, 1.0}, {0.0, 2.0}));
  }
}
BENCHMARK(BM_BellPairFromRecipe);

}  // namespace
