#include "qgraph/laplacians.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qgraph/error.hpp"
#include "qgraph/spectra.hpp"

namespace qgraph {

namespace {

constexpr double kPathWeightTolerance = 1e-9;

Complex unit(Complex z) { return z / std::abs(z); }

Complex edge_weight(const WeightedDigraph& g, const Edge& e) {
  if (g.kind() == GraphKind::VertexWeighted) {
    return vertex_arc_weight(g.vertex_weights()[e.from - 1], g.vertex_weights()[e.to - 1]);
  }
  return e.weight;
}

double sign_of(MatrixFlavor flavor) { return flavor == MatrixFlavor::Signless ? 1.0 : -1.0; }

}  // namespace

ComplexMatrix adjacency(const WeightedDigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ComplexMatrix a(n, n);
  for (const auto& e : g.edges()) {
    const Complex w = edge_weight(g, e);
    a(e.from - 1, e.to - 1) = w;
    a(e.to - 1, e.from - 1) = std::conj(w);
  }
  for (const auto& l : g.loops()) a(l.vertex - 1, l.vertex - 1) = l.weight;
  return a;
}

ComplexMatrix degree_matrix(const WeightedDigraph& g) { return ComplexMatrix::diagonal(g.degrees()); }

ComplexMatrix laplacian(const WeightedDigraph& g, MatrixFlavor flavor) {
  ComplexMatrix k = degree_matrix(g);
  const ComplexMatrix a = adjacency(g);
  if (flavor == MatrixFlavor::Signless) {
    k += a;
    return k;
  }
  k -= a;
  if (g.kind() == GraphKind::EdgeLoop && !g.loops().empty()) {
    // Loops cancel in L; rebuild the diagonal from the edges alone so the
    // cancellation is exact rather than d_i + r_i - r_i.
    for (std::size_t i = 0; i < k.rows(); ++i) k(i, i) = 0.0;
    for (const auto& e : g.edges()) {
      k(e.from - 1, e.from - 1) += std::abs(e.weight);
      k(e.to - 1, e.to - 1) += std::abs(e.weight);
    }
  }
  return k;
}

ComplexMatrix normalized_laplacian(const WeightedDigraph& g, MatrixFlavor flavor) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ComplexMatrix k(n, n);
  const double s = sign_of(flavor);
  for (const auto& e : g.edges()) {
    const Complex w = unit(edge_weight(g, e));
    const auto i = static_cast<std::size_t>(e.from - 1);
    const auto j = static_cast<std::size_t>(e.to - 1);
    k(i, i) += 1.0;
    k(j, j) += 1.0;
    k(i, j) += s * w;
    k(j, i) += s * std::conj(w);
  }
  if (flavor == MatrixFlavor::Signless) {
    for (const auto& l : g.loops()) k(l.vertex - 1, l.vertex - 1) += 2.0 * l.weight;
  }
  return k;
}

ComplexMatrix incidence(const WeightedDigraph& g, MatrixFlavor flavor) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const bool loop_columns = flavor == MatrixFlavor::Signless && g.kind() == GraphKind::EdgeLoop;
  const std::size_t cols = g.edges().size() + (loop_columns ? g.loops().size() : 0);
  ComplexMatrix m(n, cols);
  const double s = sign_of(flavor);

  std::size_t c = 0;
  for (const auto& e : g.edges()) {
    const auto i = static_cast<std::size_t>(e.from - 1);
    const auto j = static_cast<std::size_t>(e.to - 1);
    switch (g.kind()) {
      case GraphKind::EdgeUnit:
        m(i, c) = 1.0;
        m(j, c) = s * std::conj(e.weight);
        break;
      case GraphKind::VertexWeighted:
        m(i, c) = principal_sqrt(g.vertex_weights()[j]);
        m(j, c) = s * principal_sqrt(g.vertex_weights()[i]);
        break;
      case GraphKind::EdgeLoop: {
        const Complex root = principal_sqrt(e.weight);
        m(i, c) = root;
        m(j, c) = s * std::conj(root);
        break;
      }
    }
    ++c;
  }
  if (loop_columns) {
    for (const auto& l : g.loops()) m(l.vertex - 1, c++) = std::sqrt(2.0 * l.weight);
  }
  return m;
}

double quad_form(const WeightedDigraph& g, MatrixFlavor flavor, std::span<const Complex> x) {
  if (x.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw ComputeError(ErrorCode::DimensionMismatch,
                       "quad_form: vector length " + std::to_string(x.size()) +
                           " does not match vertex count " + std::to_string(g.vertex_count()));
  }
  const double s = sign_of(flavor);
  double total = 0.0;
  for (const auto& e : g.edges()) {
    const Complex xi = x[e.from - 1];
    const Complex xj = x[e.to - 1];
    switch (g.kind()) {
      case GraphKind::EdgeUnit:
        total += std::norm(xi + s * e.weight * xj);
        break;
      case GraphKind::VertexWeighted: {
        const Complex ri = std::conj(principal_sqrt(g.vertex_weights()[e.from - 1]));
        const Complex rj = std::conj(principal_sqrt(g.vertex_weights()[e.to - 1]));
        total += std::norm(rj * xi + s * ri * xj);
        break;
      }
      case GraphKind::EdgeLoop:
        total += std::norm(xi + s * unit(e.weight) * xj);
        break;
    }
  }
  if (flavor == MatrixFlavor::Signless) {
    for (const auto& l : g.loops()) total += 2.0 * l.weight * std::norm(x[l.vertex - 1]);
  }
  return total;
}

bool zero_eig_path_predicate(const WeightedDigraph& g, MatrixFlavor flavor) {
  const int n = g.vertex_count();
  if (n > kPathPredicateMaxVertices) {
    throw ComputeError(ErrorCode::SizeLimit, "path predicate supports at most " +
                                                 std::to_string(kPathPredicateMaxVertices) +
                                                 " vertices");
  }
  if (!is_connected(g)) {
    throw ComputeError(ErrorCode::DisconnectedGraph, "path predicate needs a connected graph");
  }
  if (flavor == MatrixFlavor::Signless && !g.loops().empty()) return false;

  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      const auto paths = enumerate_simple_paths(g, u, v, n);
      bool have_reference = false;
      Complex reference;
      for (const auto& path : paths) {
        Complex w = 1.0;
        for (const auto& step : path.step_weights) w *= unit(step);
        if (flavor == MatrixFlavor::Signless && path.length() % 2 == 1) w = -w;
        if (!have_reference) {
          reference = w;
          have_reference = true;
        } else if (std::abs(w - reference) > kPathWeightTolerance) {
          return false;
        }
      }
    }
  }
  return true;
}

std::size_t qualifying_component_count(const WeightedDigraph& g, MatrixFlavor flavor) {
  std::size_t count = 0;
  for (const auto& component : underlying_components(g)) {
    if (zero_eig_path_predicate(induced_subgraph(g, component), flavor)) ++count;
  }
  return count;
}

ComplexVector vertex_weighted_kernel_vector(const WeightedDigraph& g) {
  if (g.kind() != GraphKind::VertexWeighted) {
    throw ComputeError(ErrorCode::WrongKind, "kernel vector needs a vertex-weighted graph");
  }
  ComplexVector x;
  x.reserve(g.vertex_weights().size());
  for (const auto& w : g.vertex_weights()) x.push_back(std::conj(principal_sqrt(w)));
  return x;
}

}  // namespace qgraph
