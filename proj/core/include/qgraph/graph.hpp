#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qgraph/matrix.hpp"

namespace qgraph {

/// The three digraph flavors. Exactly one per graph.
enum class GraphKind {
  EdgeUnit,        ///< complex edge weights of modulus one, no loops
  VertexWeighted,  ///< nonzero complex vertex weights; edges carry direction only
  EdgeLoop,        ///< nonzero complex edge weights, positive real loops
};

/// Unit-modulus tolerance for EdgeUnit edge weights.
inline constexpr double kUnitModulusTolerance = 1e-12;

/// Directed edge between 1-based vertices. For VertexWeighted graphs the
/// weight is ignored (the effective weight is derived from vertex weights).
struct Edge {
  int from = 0;
  int to = 0;
  Complex weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Loop {
  int vertex = 0;
  double weight = 0.0;

  friend bool operator==(const Loop&, const Loop&) = default;
};

/// Immutable weighted digraph. Vertices are 1-based everywhere in the public
/// API; matrix indices derived from it are 0-based (vertex v -> row v-1).
///
/// Construction validates every invariant of the chosen kind and throws
/// ComputeError(InvalidGraph | VertexOutOfRange) otherwise. Edges are stored
/// sorted by (from, to) and loops by vertex, so two graphs with the same
/// content compare equal regardless of input order.
class WeightedDigraph {
 public:
  WeightedDigraph(GraphKind kind, int vertex_count, std::vector<Edge> edges,
                  std::vector<Loop> loops = {}, std::vector<Complex> vertex_weights = {});

  static WeightedDigraph edge_unit(int vertex_count, std::vector<Edge> edges);
  static WeightedDigraph vertex_weighted(int vertex_count, std::vector<Complex> weights,
                                         std::vector<Edge> arcs);
  static WeightedDigraph edge_loop(int vertex_count, std::vector<Edge> edges,
                                   std::vector<Loop> loops);

  GraphKind kind() const noexcept { return kind_; }
  int vertex_count() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Loop> loops() const noexcept { return loops_; }
  /// Empty unless kind() == VertexWeighted; index v-1 holds w_v.
  std::span<const Complex> vertex_weights() const noexcept { return vertex_weights_; }
  Complex vertex_weight(int v) const;

  /// Loop weight at v, 0 when v carries no loop.
  double loop_weight(int v) const;

  /// Cached degrees, index v-1.
  std::span<const double> degrees() const noexcept { return degrees_; }
  double total_degree() const noexcept;

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

 private:
  void validate() const;
  void compute_degrees();

  GraphKind kind_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<Loop> loops_;
  std::vector<Complex> vertex_weights_;
  std::vector<double> degrees_;
};

/// Derived edge weight of a vertex-weighted arc i -> j:
/// conj(sqrt(w_i)) * sqrt(w_j) with the principal root. It squares to
/// conj(w_i) w_j and satisfies weight(j, i) == conj(weight(i, j)) exactly.
Complex vertex_arc_weight(Complex w_from, Complex w_to) noexcept;

/// Weight met when walking the skeleton from a to b along an existing edge:
/// w_ab along the edge direction, conj(w_ba) against it (the adjacency entry
/// a_ab). Throws InvalidArgument if a and b are not adjacent.
Complex traversal_weight(const WeightedDigraph& g, int a, int b);

/// Degree of v (1-based). Throws VertexOutOfRange.
double degree(const WeightedDigraph& g, int v);

/// Connected components of the undirected skeleton (loops ignored), each
/// ascending, ordered by smallest member.
std::vector<std::vector<int>> underlying_components(const WeightedDigraph& g);
bool is_connected(const WeightedDigraph& g);

struct SkeletonPath {
  std::vector<int> vertices;
  std::vector<Complex> step_weights;  ///< traversal weight of each step

  std::size_t length() const noexcept { return step_weights.size(); }
  Complex weight() const;
};

/// All simple u ~> v paths in the skeleton with at most max_len edges, in
/// lexicographic DFS order (neighbors ascending).
std::vector<SkeletonPath> enumerate_simple_paths(const WeightedDigraph& g, int u, int v,
                                                 int max_len);

/// True iff the skeleton is not bipartite.
bool has_odd_cycle(const WeightedDigraph& g);

/// Subgraph induced on `vertices`, relabelled 1..k in the given order.
WeightedDigraph induced_subgraph(const WeightedDigraph& g, std::span<const int> vertices);

/// Sorted neighbor lists of the skeleton, index v-1.
std::vector<std::vector<int>> skeleton_neighbors(const WeightedDigraph& g);

}  // namespace qgraph
