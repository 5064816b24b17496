#include "qgraph/analogies.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>

#include "qgraph/error.hpp"

namespace qgraph {

DiffusionState diffuse(const WeightedDigraph& g, std::span<const double> psi0, double alpha,
                       double dt, std::size_t steps) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (psi0.size() != n) {
    throw ComputeError(ErrorCode::DimensionMismatch, "initial state length does not match vertex count");
  }
  if (!(alpha > 0.0) || !(dt > 0.0) || !std::isfinite(alpha) || !std::isfinite(dt)) {
    throw ComputeError(ErrorCode::InvalidArgument, "alpha and dt must be positive");
  }
  for (double x : psi0) {
    if (!std::isfinite(x)) throw ComputeError(ErrorCode::InvalidArgument, "initial state is not finite");
  }
  const auto neighbors = skeleton_neighbors(g);
  std::size_t max_degree = 0;
  for (const auto& list : neighbors) max_degree = std::max(max_degree, list.size());
  if (dt * alpha * static_cast<double>(max_degree) >= 1.0) {
    throw ComputeError(ErrorCode::StabilityViolation,
                       "explicit Euler needs dt * alpha * max_degree < 1");
  }

  DiffusionState state{{psi0.begin(), psi0.end()}, 0.0};
  std::vector<double> next(n);
  for (std::size_t step = 0; step < steps; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      double flow = 0.0;
      for (int j : neighbors[i]) flow += state.psi[j - 1] - state.psi[i];
      next[i] = state.psi[i] + dt * alpha * flow;
    }
    state.psi.swap(next);
  }
  state.t = dt * static_cast<double>(steps);
  return state;
}

namespace {

void validate_edges(int n, std::span<const UndirectedEdge> edges) {
  if (n < 1) throw ComputeError(ErrorCode::InvalidArgument, "vertex count must be positive");
  for (const auto& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw ComputeError(ErrorCode::VertexOutOfRange, "edge endpoint out of range");
    }
    if (e.u == e.v) throw ComputeError(ErrorCode::InvalidArgument, "self edges are not allowed");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw ComputeError(ErrorCode::InvalidArgument, "edge weights must be finite and nonnegative");
    }
  }
}

}  // namespace

std::vector<double> stationary_distribution(int n, std::span<const UndirectedEdge> edges) {
  validate_edges(n, edges);
  std::vector<double> strength(static_cast<std::size_t>(n), 0.0);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  double total = 0.0;
  for (const auto& e : edges) {
    strength[e.u - 1] += e.weight;
    strength[e.v - 1] += e.weight;
    total += e.weight;
    if (e.weight > 0.0) {
      adj[e.u - 1].push_back(e.v - 1);
      adj[e.v - 1].push_back(e.u - 1);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (strength[v] == 0.0) {
      throw ComputeError(ErrorCode::ZeroStrengthVertex,
                         "vertex " + std::to_string(v + 1) + " has zero strength");
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != static_cast<std::size_t>(n)) {
    throw ComputeError(ErrorCode::DisconnectedGraph, "random walk needs a connected graph");
  }
  std::vector<double> gamma(strength.size());
  for (std::size_t j = 0; j < gamma.size(); ++j) gamma[j] = strength[j] / (2.0 * total);
  return gamma;
}

std::vector<double> stationary_distribution(const WeightedDigraph& g) {
  std::vector<UndirectedEdge> edges;
  for (const auto& e : g.edges()) {
    double w = std::abs(e.weight);
    if (g.kind() == GraphKind::VertexWeighted) {
      w = std::abs(vertex_arc_weight(g.vertex_weights()[e.from - 1], g.vertex_weights()[e.to - 1]));
    }
    edges.push_back({e.from, e.to, w});
  }
  return stationary_distribution(g.vertex_count(), edges);
}

std::vector<std::vector<double>> transition_matrix(int n, std::span<const UndirectedEdge> edges) {
  validate_edges(n, edges);
  const auto size = static_cast<std::size_t>(n);
  std::vector<std::vector<double>> p(size, std::vector<double>(size, 0.0));
  for (const auto& e : edges) {
    p[e.u - 1][e.v - 1] += e.weight;
    p[e.v - 1][e.u - 1] += e.weight;
  }
  for (std::size_t i = 0; i < size; ++i) {
    double row = 0.0;
    for (double x : p[i]) row += x;
    if (row == 0.0) {
      throw ComputeError(ErrorCode::ZeroStrengthVertex,
                         "vertex " + std::to_string(i + 1) + " has zero strength");
    }
    for (double& x : p[i]) x /= row;
  }
  return p;
}

Complex coates_determinant(const ComplexMatrix& a) {
  if (!a.is_square()) throw ComputeError(ErrorCode::DimensionMismatch, "determinant needs a square matrix");
  const std::size_t n = a.rows();
  if (n > kCoatesMaxSize) {
    throw ComputeError(ErrorCode::SizeLimit,
                       "Coates expansion supports n <= " + std::to_string(kCoatesMaxSize));
  }
  if (n == 0) return 1.0;

  // Each linear subgraph is a permutation sigma using only arcs i -> sigma(i)
  // with a_{i, sigma(i)} != 0; its sign is (-1)^n (-1)^{cycles}.
  std::vector<int> sigma(n, -1);
  std::vector<bool> used(n, false);
  Complex total = 0.0;

  auto count_cycles = [&]() {
    std::vector<bool> visited(n, false);
    int cycles = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (visited[s]) continue;
      ++cycles;
      for (std::size_t x = s; !visited[x]; x = static_cast<std::size_t>(sigma[x])) visited[x] = true;
    }
    return cycles;
  };

  std::function<void(std::size_t, Complex)> extend = [&](std::size_t row, Complex weight) {
    if (row == n) {
      const int cycles = count_cycles();
      const bool negative = ((n + static_cast<std::size_t>(cycles)) % 2) == 1;
      total += negative ? -weight : weight;
      return;
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (used[col] || a(row, col) == Complex{}) continue;
      used[col] = true;
      sigma[row] = static_cast<int>(col);
      extend(row + 1, weight * a(row, col));
      used[col] = false;
    }
  };
  extend(0, 1.0);
  return total;
}

Complex permanent(const ComplexMatrix& a) {
  if (!a.is_square()) throw ComputeError(ErrorCode::DimensionMismatch, "permanent needs a square matrix");
  const std::size_t n = a.rows();
  if (n > kPermanentMaxSize) {
    throw ComputeError(ErrorCode::SizeLimit,
                       "permanent supports n <= " + std::to_string(kPermanentMaxSize));
  }
  if (n == 0) return 1.0;

  // Ryser: perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij,
  // walking subsets in Gray-code order so each step updates one column.
  std::vector<Complex> row_sums(n, 0.0);
  Complex total = 0.0;
  const std::uint32_t subsets = 1u << n;
  std::uint32_t gray = 0;
  for (std::uint32_t k = 1; k < subsets; ++k) {
    const std::uint32_t next = k ^ (k >> 1);
    const std::uint32_t flipped = next ^ gray;
    const auto col = static_cast<std::size_t>(__builtin_ctz(flipped));
    const double sign = (next & flipped) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) row_sums[i] += sign * a(i, col);
    gray = next;

    Complex prod = 1.0;
    for (const auto& s : row_sums) prod *= s;
    const int size = __builtin_popcount(gray);
    total += ((n - static_cast<std::size_t>(size)) % 2 == 0) ? prod : -prod;
  }
  return total;
}

}  // namespace qgraph
