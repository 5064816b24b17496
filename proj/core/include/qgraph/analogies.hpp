#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/matrix.hpp"

namespace qgraph {

inline constexpr std::size_t kCoatesMaxSize = 10;
inline constexpr std::size_t kPermanentMaxSize = 12;

struct DiffusionState {
  std::vector<double> psi;
  double t = 0.0;
};

/// Explicit Euler for d psi/dt = alpha (A - D) psi on the undirected skeleton
/// (every edge weight 1). Throws DimensionMismatch, InvalidArgument
/// (alpha <= 0, dt <= 0), StabilityViolation (dt alpha d_max >= 1).
DiffusionState diffuse(const WeightedDigraph& g, std::span<const double> psi0, double alpha,
                       double dt, std::size_t steps);

struct UndirectedEdge {
  int u = 0;  ///< 1-based
  int v = 0;
  double weight = 1.0;
};

/// gamma_j = w_j / (2 w) with w_j the strength of j and w the total edge
/// weight. Throws InvalidArgument (bad vertex, negative weight, self edge),
/// DisconnectedGraph, ZeroStrengthVertex.
std::vector<double> stationary_distribution(int n, std::span<const UndirectedEdge> edges);

/// Same, on the skeleton of g with |w_ij| as edge weights.
std::vector<double> stationary_distribution(const WeightedDigraph& g);

/// Row-stochastic p_ij = w_ij / sum_k w_ik.
std::vector<std::vector<double>> transition_matrix(int n, std::span<const UndirectedEdge> edges);

/// Determinant as the signed sum over linear subgraphs (cycle covers) of the
/// Coates digraph of a. Throws DimensionMismatch, SizeLimit (n > kCoatesMaxSize).
Complex coates_determinant(const ComplexMatrix& a);

/// Ryser's formula. Throws DimensionMismatch, SizeLimit (n > kPermanentMaxSize).
Complex permanent(const ComplexMatrix& a);

}  // namespace qgraph
