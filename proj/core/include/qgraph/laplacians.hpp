#pragma once

#include <cstddef>
#include <span>

#include "qgraph/graph.hpp"
#include "qgraph/matrix.hpp"

namespace qgraph {

enum class MatrixFlavor {
  Combinatorial,  ///< L = D - A
  Signless,       ///< Q = D + A
};

/// Largest graph accepted by zero_eig_path_predicate (path enumeration is
/// exponential; use the eigensolver beyond this).
inline constexpr int kPathPredicateMaxVertices = 10;

/// Hermitian adjacency matrix. Loops of an EdgeLoop graph sit on the diagonal.
ComplexMatrix adjacency(const WeightedDigraph& g);

/// diag(d_1, ..., d_n) from the cached graph degrees.
ComplexMatrix degree_matrix(const WeightedDigraph& g);

/// D - A or D + A.
ComplexMatrix laplacian(const WeightedDigraph& g, MatrixFlavor flavor);

/// Vertex x column incidence matrix M with laplacian(g, flavor) == M M^dagger.
///
/// Columns follow the graph's edge order; for EdgeLoop + Signless one extra
/// column per loop (ascending vertex) carries sqrt(2 r) at the looped vertex,
/// which accounts for r in both D and A.
ComplexMatrix incidence(const WeightedDigraph& g, MatrixFlavor flavor);

/// Edge-sum form of x^dagger K x.
///
/// EdgeUnit:        sum |x_i -+ w_ij x_j|^2
/// VertexWeighted:  sum |conj(sqrt w_j) x_i -+ conj(sqrt w_i) x_j|^2
/// EdgeLoop:        sum |x_i -+ w^_ij x_j|^2 (+ 2 sum r_i |x_i|^2 for Signless)
///                  with w^ = w/|w|, i.e. the form of the normalized D^ +- A^.
double quad_form(const WeightedDigraph& g, MatrixFlavor flavor, std::span<const Complex> x);

/// D^ +- A^ built from unit-modulus edge weights (EdgeLoop reference for quad_form).
ComplexMatrix normalized_laplacian(const WeightedDigraph& g, MatrixFlavor flavor);

/// Path-weight condition for a zero eigenvalue of a connected graph.
///
/// Traversal weights are normalized to unit modulus. Signless: (-1)^len W(P)
/// must agree over all simple paths between every vertex pair, and no loop may
/// be present. Combinatorial: W(P) must agree. Throws DisconnectedGraph,
/// SizeLimit (n > kPathPredicateMaxVertices).
bool zero_eig_path_predicate(const WeightedDigraph& g, MatrixFlavor flavor);

/// Number of underlying components whose induced subgraph satisfies
/// zero_eig_path_predicate; equals the multiplicity of eigenvalue 0.
std::size_t qualifying_component_count(const WeightedDigraph& g, MatrixFlavor flavor);

/// (conj(sqrt w_1), ..., conj(sqrt w_n)), a kernel vector of the combinatorial
/// Laplacian of a vertex-weighted graph. Throws WrongKind.
ComplexVector vertex_weighted_kernel_vector(const WeightedDigraph& g);

}  // namespace qgraph
