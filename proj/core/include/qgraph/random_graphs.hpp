#pragma once

#include <random>
#include <utility>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

struct RandomGraphOptions {
  double edge_probability = 0.5;
  double loop_probability = 0.3;  ///< EdgeLoop only
  /// 0 draws phases uniformly from [0, 2 pi); k > 0 restricts them to
  /// multiples of 2 pi / k, which makes cycle-phase cancellations exact
  /// enough to exercise kernel conditions.
  int phase_grid = 0;
  double min_modulus = 0.5;  ///< EdgeLoop edge weights, vertex weights
  double max_modulus = 2.0;
  double min_loop = 0.1;
  double max_loop = 2.0;
};

using Skeleton = std::vector<std::pair<int, int>>;

/// Random weights and directions on a fixed undirected skeleton (1-based pairs).
WeightedDigraph graph_on_skeleton(GraphKind kind, int n, const Skeleton& skeleton,
                                  std::mt19937_64& rng, const RandomGraphOptions& options = {});

/// Erdos-Renyi skeleton with random weights.
WeightedDigraph random_graph(GraphKind kind, int n, std::mt19937_64& rng,
                             const RandomGraphOptions& options = {});

/// Random spanning tree plus Erdos-Renyi extra edges.
WeightedDigraph random_connected_graph(GraphKind kind, int n, std::mt19937_64& rng,
                                       const RandomGraphOptions& options = {});

/// All 2^(n(n-1)/2) skeletons on n labelled vertices.
std::vector<Skeleton> all_skeletons(int n);

/// Random complex number with the configured modulus range and phase rule.
Complex random_weight(std::mt19937_64& rng, const RandomGraphOptions& options, bool unit);

}  // namespace qgraph
