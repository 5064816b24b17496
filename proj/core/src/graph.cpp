#include "qgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "qgraph/error.hpp"
#include "qgraph/spectra.hpp"

namespace qgraph {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw ComputeError(ErrorCode::InvalidGraph, message);
}

std::string vertex_text(int v) { return std::to_string(v); }

}  // namespace

WeightedDigraph::WeightedDigraph(GraphKind kind, int vertex_count, std::vector<Edge> edges,
                                 std::vector<Loop> loops, std::vector<Complex> vertex_weights)
    : kind_(kind),
      n_(vertex_count),
      edges_(std::move(edges)),
      loops_(std::move(loops)),
      vertex_weights_(std::move(vertex_weights)) {
  if (kind_ == GraphKind::VertexWeighted) {
    for (auto& e : edges_) e.weight = 1.0;
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  });
  std::sort(loops_.begin(), loops_.end(),
            [](const Loop& a, const Loop& b) { return a.vertex < b.vertex; });
  validate();
  compute_degrees();
}

WeightedDigraph WeightedDigraph::edge_unit(int vertex_count, std::vector<Edge> edges) {
  return {GraphKind::EdgeUnit, vertex_count, std::move(edges)};
}

WeightedDigraph WeightedDigraph::vertex_weighted(int vertex_count, std::vector<Complex> weights,
                                                 std::vector<Edge> arcs) {
  return {GraphKind::VertexWeighted, vertex_count, std::move(arcs), {}, std::move(weights)};
}

WeightedDigraph WeightedDigraph::edge_loop(int vertex_count, std::vector<Edge> edges,
                                           std::vector<Loop> loops) {
  return {GraphKind::EdgeLoop, vertex_count, std::move(edges), std::move(loops)};
}

void WeightedDigraph::validate() const {
  if (n_ < 1) invalid("vertex count must be at least 1");

  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_) {
    if (e.from < 1 || e.from > n_ || e.to < 1 || e.to > n_) {
      throw ComputeError(ErrorCode::VertexOutOfRange,
                         "edge " + vertex_text(e.from) + " " + vertex_text(e.to) +
                             " references a vertex outside 1.." + vertex_text(n_));
    }
    if (e.from == e.to) invalid("edge endpoints must differ (use a loop)");
    if (!seen.emplace(std::min(e.from, e.to), std::max(e.from, e.to)).second) {
      invalid("duplicate edge between " + vertex_text(e.from) + " and " + vertex_text(e.to));
    }
    if (!is_finite(e.weight)) invalid("non-finite edge weight");
    switch (kind_) {
      case GraphKind::EdgeUnit:
        if (std::abs(std::abs(e.weight) - 1.0) > kUnitModulusTolerance) {
          invalid("edge-unit weight must have modulus one");
        }
        break;
      case GraphKind::EdgeLoop:
        if (e.weight == Complex{}) invalid("edge weight must be nonzero");
        break;
      case GraphKind::VertexWeighted:
        break;
    }
  }

  if (kind_ != GraphKind::EdgeLoop && !loops_.empty()) {
    invalid("loops are only allowed in edge-loop graphs");
  }
  int previous = 0;
  for (const auto& l : loops_) {
    if (l.vertex < 1 || l.vertex > n_) {
      throw ComputeError(ErrorCode::VertexOutOfRange,
                         "loop at vertex " + vertex_text(l.vertex) + " is out of range");
    }
    if (l.vertex == previous) invalid("more than one loop at vertex " + vertex_text(l.vertex));
    if (!(l.weight > 0.0) || !std::isfinite(l.weight)) invalid("loop weight must be positive");
    previous = l.vertex;
  }

  if (kind_ == GraphKind::VertexWeighted) {
    if (vertex_weights_.size() != static_cast<std::size_t>(n_)) {
      invalid("every vertex of a vertex-weighted graph needs a weight");
    }
    for (const auto& w : vertex_weights_) {
      if (!is_finite(w) || w == Complex{}) invalid("vertex weights must be finite and nonzero");
    }
  } else if (!vertex_weights_.empty()) {
    invalid("vertex weights are only allowed in vertex-weighted graphs");
  }
}

void WeightedDigraph::compute_degrees() {
  degrees_.assign(static_cast<std::size_t>(n_), 0.0);
  for (const auto& e : edges_) {
    if (kind_ == GraphKind::VertexWeighted) {
      degrees_[e.from - 1] += std::abs(vertex_weights_[e.to - 1]);
      degrees_[e.to - 1] += std::abs(vertex_weights_[e.from - 1]);
    } else {
      degrees_[e.from - 1] += std::abs(e.weight);
      degrees_[e.to - 1] += std::abs(e.weight);
    }
  }
  for (const auto& l : loops_) degrees_[l.vertex - 1] += l.weight;
}

Complex WeightedDigraph::vertex_weight(int v) const {
  if (kind_ != GraphKind::VertexWeighted) {
    throw ComputeError(ErrorCode::WrongKind, "graph has no vertex weights");
  }
  if (v < 1 || v > n_) throw ComputeError(ErrorCode::VertexOutOfRange, "vertex out of range");
  return vertex_weights_[v - 1];
}

double WeightedDigraph::loop_weight(int v) const {
  for (const auto& l : loops_)
    if (l.vertex == v) return l.weight;
  return 0.0;
}

double WeightedDigraph::total_degree() const noexcept {
  double sum = 0.0;
  for (double d : degrees_) sum += d;
  return sum;
}

Complex vertex_arc_weight(Complex w_from, Complex w_to) noexcept {
  return std::conj(principal_sqrt(w_from)) * principal_sqrt(w_to);
}

Complex traversal_weight(const WeightedDigraph& g, int a, int b) {
  for (const auto& e : g.edges()) {
    const bool forward = e.from == a && e.to == b;
    const bool backward = e.from == b && e.to == a;
    if (!forward && !backward) continue;
    Complex w = e.weight;
    if (g.kind() == GraphKind::VertexWeighted) {
      w = vertex_arc_weight(g.vertex_weights()[e.from - 1], g.vertex_weights()[e.to - 1]);
    }
    return forward ? w : std::conj(w);
  }
  throw ComputeError(ErrorCode::InvalidArgument,
                     "vertices " + vertex_text(a) + " and " + vertex_text(b) + " are not adjacent");
}

double degree(const WeightedDigraph& g, int v) {
  if (v < 1 || v > g.vertex_count()) {
    throw ComputeError(ErrorCode::VertexOutOfRange, "vertex " + vertex_text(v) + " out of range");
  }
  return g.degrees()[v - 1];
}

std::vector<std::vector<int>> skeleton_neighbors(const WeightedDigraph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& e : g.edges()) {
    adj[e.from - 1].push_back(e.to);
    adj[e.to - 1].push_back(e.from);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<std::vector<int>> underlying_components(const WeightedDigraph& g) {
  const auto adj = skeleton_neighbors(g);
  std::vector<bool> visited(adj.size(), false);
  std::vector<std::vector<int>> components;
  for (int start = 1; start <= g.vertex_count(); ++start) {
    if (visited[start - 1]) continue;
    std::vector<int> component;
    std::queue<int> frontier;
    frontier.push(start);
    visited[start - 1] = true;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      component.push_back(v);
      for (int w : adj[v - 1]) {
        if (!visited[w - 1]) {
          visited[w - 1] = true;
          frontier.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected(const WeightedDigraph& g) { return underlying_components(g).size() == 1; }

Complex SkeletonPath::weight() const {
  Complex w = 1.0;
  for (const auto& s : step_weights) w *= s;
  return w;
}

std::vector<SkeletonPath> enumerate_simple_paths(const WeightedDigraph& g, int u, int v,
                                                 int max_len) {
  const int n = g.vertex_count();
  if (u < 1 || u > n || v < 1 || v > n) {
    throw ComputeError(ErrorCode::VertexOutOfRange, "path endpoint out of range");
  }
  if (u == v) throw ComputeError(ErrorCode::InvalidArgument, "path endpoints must differ");
  if (max_len > n) throw ComputeError(ErrorCode::InvalidArgument, "max_len exceeds vertex count");

  const auto adj = skeleton_neighbors(g);
  std::vector<SkeletonPath> paths;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  SkeletonPath current;
  current.vertices.push_back(u);
  on_path[u - 1] = true;

  std::function<void(int)> extend = [&](int at) {
    if (at == v) {
      paths.push_back(current);
      return;
    }
    if (static_cast<int>(current.length()) >= max_len) return;
    for (int next : adj[at - 1]) {
      if (on_path[next - 1]) continue;
      on_path[next - 1] = true;
      current.vertices.push_back(next);
      current.step_weights.push_back(traversal_weight(g, at, next));
      extend(next);
      current.vertices.pop_back();
      current.step_weights.pop_back();
      on_path[next - 1] = false;
    }
  };
  extend(u);
  return paths;
}

bool has_odd_cycle(const WeightedDigraph& g) {
  const auto adj = skeleton_neighbors(g);
  std::vector<int> color(adj.size(), -1);
  for (int start = 1; start <= g.vertex_count(); ++start) {
    if (color[start - 1] != -1) continue;
    color[start - 1] = 0;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const int x = frontier.front();
      frontier.pop();
      for (int y : adj[x - 1]) {
        if (color[y - 1] == -1) {
          color[y - 1] = 1 - color[x - 1];
          frontier.push(y);
        } else if (color[y - 1] == color[x - 1]) {
          return true;
        }
      }
    }
  }
  return false;
}

WeightedDigraph induced_subgraph(const WeightedDigraph& g, std::span<const int> vertices) {
  std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const int v = vertices[k];
    if (v < 1 || v > g.vertex_count()) {
      throw ComputeError(ErrorCode::VertexOutOfRange, "induced_subgraph: vertex out of range");
    }
    relabel[v] = static_cast<int>(k) + 1;
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (relabel[e.from] && relabel[e.to]) edges.push_back({relabel[e.from], relabel[e.to], e.weight});
  }
  std::vector<Loop> loops;
  for (const auto& l : g.loops()) {
    if (relabel[l.vertex]) loops.push_back({relabel[l.vertex], l.weight});
  }
  std::vector<Complex> weights;
  if (g.kind() == GraphKind::VertexWeighted) {
    for (int v : vertices) weights.push_back(g.vertex_weights()[v - 1]);
  }
  return {g.kind(), static_cast<int>(vertices.size()), std::move(edges), std::move(loops),
          std::move(weights)};
}

}  // namespace qgraph
