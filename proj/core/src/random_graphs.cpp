#include "qgraph/random_graphs.hpp"

#include <cmath>
#include <numbers>

#include "qgraph/error.hpp"

namespace qgraph {

Complex random_weight(std::mt19937_64& rng, const RandomGraphOptions& options, bool unit) {
  double theta = 0.0;
  if (options.phase_grid > 0) {
    std::uniform_int_distribution<int> step(0, options.phase_grid - 1);
    theta = 2.0 * std::numbers::pi * step(rng) / options.phase_grid;
  } else {
    theta = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
  }
  if (unit) return {std::cos(theta), std::sin(theta)};
  const double r = std::uniform_real_distribution<double>(options.min_modulus, options.max_modulus)(rng);
  return {r * std::cos(theta), r * std::sin(theta)};
}

WeightedDigraph graph_on_skeleton(GraphKind kind, int n, const Skeleton& skeleton,
                                  std::mt19937_64& rng, const RandomGraphOptions& options) {
  if (n < 1) throw ComputeError(ErrorCode::InvalidArgument, "vertex count must be positive");
  std::bernoulli_distribution flip(0.5);
  std::vector<Edge> edges;
  edges.reserve(skeleton.size());
  for (auto [u, v] : skeleton) {
    if (flip(rng)) std::swap(u, v);
    Complex w = 1.0;
    if (kind != GraphKind::VertexWeighted) w = random_weight(rng, options, kind == GraphKind::EdgeUnit);
    edges.push_back({u, v, w});
  }
  std::vector<Loop> loops;
  std::vector<Complex> vertex_weights;
  if (kind == GraphKind::EdgeLoop) {
    std::bernoulli_distribution has_loop(options.loop_probability);
    std::uniform_real_distribution<double> loop_weight(options.min_loop, options.max_loop);
    for (int v = 1; v <= n; ++v) {
      if (has_loop(rng)) loops.push_back({v, loop_weight(rng)});
    }
  } else if (kind == GraphKind::VertexWeighted) {
    for (int v = 1; v <= n; ++v) vertex_weights.push_back(random_weight(rng, options, false));
  }
  return {kind, n, std::move(edges), std::move(loops), std::move(vertex_weights)};
}

WeightedDigraph random_graph(GraphKind kind, int n, std::mt19937_64& rng,
                             const RandomGraphOptions& options) {
  std::bernoulli_distribution keep(options.edge_probability);
  Skeleton skeleton;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (keep(rng)) skeleton.emplace_back(u, v);
  return graph_on_skeleton(kind, n, skeleton, rng, options);
}

WeightedDigraph random_connected_graph(GraphKind kind, int n, std::mt19937_64& rng,
                                       const RandomGraphOptions& options) {
  std::bernoulli_distribution keep(options.edge_probability);
  std::vector<std::vector<bool>> present(static_cast<std::size_t>(n) + 1,
                                         std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  Skeleton skeleton;
  for (int v = 2; v <= n; ++v) {
    const int parent = std::uniform_int_distribution<int>(1, v - 1)(rng);
    skeleton.emplace_back(parent, v);
    present[parent][v] = true;
  }
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!present[u][v] && keep(rng)) skeleton.emplace_back(u, v);
  return graph_on_skeleton(kind, n, skeleton, rng, options);
}

std::vector<Skeleton> all_skeletons(int n) {
  Skeleton pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  if (pairs.size() > 20) throw ComputeError(ErrorCode::SizeLimit, "too many skeletons to enumerate");
  std::vector<Skeleton> out;
  const std::size_t count = std::size_t{1} << pairs.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Skeleton s;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask & (std::size_t{1} << k)) s.push_back(pairs[k]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace qgraph
