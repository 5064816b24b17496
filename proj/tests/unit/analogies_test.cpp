#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qgraph/analogies.hpp"
#include "qgraph/error.hpp"
#include "qgraph/random_graphs.hpp"

namespace qgraph {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const ComputeError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ComputeError thrown";
  return ErrorCode::InvalidArgument;
}

std::vector<double> gamma_times_p(const std::vector<double>& gamma, const std::vector<std::vector<double>>& p) {
  std::vector<double> out(gamma.size(), 0.0);
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (std::size_t j = 0; j < gamma.size(); ++j) out[j] += gamma[i] * p[i][j];
  return out;
}

TEST(CoatesDeterminant, SmallCases) {
  EXPECT_EQ(coates_determinant(ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}), Complex(-2.0));
  EXPECT_EQ(coates_determinant(ComplexMatrix::identity(5)), Complex(1.0));
  EXPECT_EQ(coates_determinant(ComplexMatrix{{7.0}}), Complex(7.0));
  // Permutation matrix of a 3-cycle: one even cycle cover.
  EXPECT_EQ(coates_determinant(ComplexMatrix{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}}), Complex(1.0));
  EXPECT_EQ(coates_determinant(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}), Complex(-1.0));
  EXPECT_EQ(coates_determinant(ComplexMatrix::zeros(3, 3)), Complex{});
}

TEST(CoatesDeterminant, MatchesLaplaceExpansion) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const auto a = oracle::random_matrix(n, n, rng);
    EXPECT_LE(std::abs(coates_determinant(a) - oracle::laplace_determinant(a)), 1e-9) << n;
  }
}

TEST(CoatesDeterminant, Errors) {
  EXPECT_EQ(code_of([] { coates_determinant(ComplexMatrix(2, 3)); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { coates_determinant(ComplexMatrix::identity(kCoatesMaxSize + 1)); }),
            ErrorCode::SizeLimit);
}

TEST(Permanent, SmallCases) {
  EXPECT_EQ(permanent(ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}), Complex(10.0));
  EXPECT_EQ(permanent(ComplexMatrix::identity(4)), Complex(1.0));
  ComplexMatrix ones(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) ones(i, j) = 1.0;
  EXPECT_EQ(permanent(ones), Complex(24.0));
  EXPECT_EQ(code_of([] { permanent(ComplexMatrix(3, 2)); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { permanent(ComplexMatrix::identity(kPermanentMaxSize + 1)); }), ErrorCode::SizeLimit);
}

TEST(Permanent, MatchesDefinition) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const auto a = oracle::random_matrix(n, n, rng);
    EXPECT_LE(std::abs(permanent(a) - oracle::naive_permanent(a)), 1e-9) << n;
  }
}

TEST(Permanent, CountsPerfectMatchings) {
  std::mt19937_64 rng(63);
  std::bernoulli_distribution bit(0.55);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    std::vector<std::vector<int>> b(n, std::vector<int>(n));
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        b[i][j] = bit(rng) ? 1 : 0;
        a(i, j) = b[i][j];
      }
    const Complex p = permanent(a);
    EXPECT_EQ(p.imag(), 0.0);
    EXPECT_EQ(p.real(), static_cast<double>(oracle::count_perfect_matchings(b)));
  }
}

TEST(StationaryDistribution, KnownGraphs) {
  const UndirectedEdge cycle[] = {{1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}, {4, 1, 1.0}};
  for (double g : stationary_distribution(4, cycle)) EXPECT_EQ(g, 0.25);

  const UndirectedEdge triangle[] = {{1, 2, 1.0}, {2, 3, 2.0}, {1, 3, 3.0}};
  const auto gamma = stationary_distribution(3, triangle);
  EXPECT_DOUBLE_EQ(gamma[0], 4.0 / 12.0);
  EXPECT_DOUBLE_EQ(gamma[1], 3.0 / 12.0);
  EXPECT_DOUBLE_EQ(gamma[2], 5.0 / 12.0);

  const UndirectedEdge star[] = {{1, 2, 1.0}, {1, 3, 1.0}, {1, 4, 1.0}};
  const auto s = stationary_distribution(4, star);
  EXPECT_EQ(s[0], 0.5);
  for (std::size_t j = 1; j < 4; ++j) EXPECT_DOUBLE_EQ(s[j], 1.0 / 6.0);
}

TEST(StationaryDistribution, IsInvariantUnderTheWalk) {
  std::mt19937_64 rng(64);
  std::uniform_real_distribution<double> weight(0.1, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const auto g = random_connected_graph(GraphKind::EdgeUnit, n, rng);
    std::vector<UndirectedEdge> edges;
    for (const auto& e : g.edges()) edges.push_back({e.from, e.to, weight(rng)});
    const auto gamma = stationary_distribution(n, edges);
    EXPECT_NEAR(std::accumulate(gamma.begin(), gamma.end(), 0.0), 1.0, 1e-12);
    const auto moved = gamma_times_p(gamma, transition_matrix(n, edges));
    for (std::size_t j = 0; j < gamma.size(); ++j) EXPECT_NEAR(moved[j], gamma[j], 1e-12);
  }
}

TEST(StationaryDistribution, FromWeightedDigraph) {
  const auto g = WeightedDigraph::edge_loop(3, {{1, 2, Complex(3.0, 4.0)}, {3, 2, Complex(0.0, -1.0)}}, {{1, 2.0}});
  const auto gamma = stationary_distribution(g);
  EXPECT_DOUBLE_EQ(gamma[0], 5.0 / 12.0);
  EXPECT_DOUBLE_EQ(gamma[1], 6.0 / 12.0);
  EXPECT_DOUBLE_EQ(gamma[2], 1.0 / 12.0);
}

TEST(StationaryDistribution, Errors) {
  const UndirectedEdge split[] = {{1, 2, 1.0}, {3, 4, 1.0}};
  EXPECT_EQ(code_of([&] { stationary_distribution(4, split); }), ErrorCode::DisconnectedGraph);
  const UndirectedEdge isolated[] = {{1, 2, 1.0}};
  EXPECT_EQ(code_of([&] { stationary_distribution(3, isolated); }), ErrorCode::ZeroStrengthVertex);
  const UndirectedEdge self[] = {{1, 1, 1.0}};
  EXPECT_EQ(code_of([&] { stationary_distribution(1, self); }), ErrorCode::InvalidArgument);
  const UndirectedEdge negative[] = {{1, 2, -1.0}};
  EXPECT_EQ(code_of([&] { stationary_distribution(2, negative); }), ErrorCode::InvalidArgument);
  const UndirectedEdge outside[] = {{1, 5, 1.0}};
  EXPECT_EQ(code_of([&] { stationary_distribution(2, outside); }), ErrorCode::VertexOutOfRange);
}

TEST(Diffuse, SingleEdgeMatchesClosedForm) {
  const auto g = WeightedDigraph::edge_unit(2, {{1, 2, Complex(0.0, 1.0)}});
  const double psi0[] = {1.0, 0.0};
  for (const std::size_t steps : {0u, 1u, 5u, 100u}) {
    const auto state = diffuse(g, psi0, 0.5, 0.2, steps);
    const auto expected = oracle::two_vertex_euler(1.0, 0.0, 0.5, 0.2, steps);
    EXPECT_NEAR(state.psi[0], expected[0], 1e-15);
    EXPECT_NEAR(state.psi[1], expected[1], 1e-15);
    EXPECT_DOUBLE_EQ(state.t, 0.2 * static_cast<double>(steps));
  }
}

TEST(Diffuse, ConservesMassAndReachesUniform) {
  std::mt19937_64 rng(65);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 7;
    const auto g = random_connected_graph(static_cast<GraphKind>(trial % 3), n, rng);
    std::vector<double> psi0(static_cast<std::size_t>(n));
    for (double& x : psi0) x = u(rng);
    const double mass = std::accumulate(psi0.begin(), psi0.end(), 0.0);
    std::size_t dmax = 0;
    for (const auto& list : skeleton_neighbors(g)) dmax = std::max(dmax, list.size());
    const double dt = 0.5 / static_cast<double>(dmax);
    const auto state = diffuse(g, psi0, 1.0, dt, 10000);
    EXPECT_NEAR(std::accumulate(state.psi.begin(), state.psi.end(), 0.0), mass, 1e-9);
    for (double x : state.psi) EXPECT_NEAR(x, mass / n, 1e-6);
  }
}

TEST(Diffuse, Errors) {
  const auto g = WeightedDigraph::edge_unit(3, {{1, 2, 1.0}, {2, 3, 1.0}});
  const double psi0[] = {1.0, 0.0, 0.0};
  const double short_psi[] = {1.0};
  EXPECT_EQ(code_of([&] { diffuse(g, short_psi, 1.0, 0.1, 1); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([&] { diffuse(g, psi0, 0.0, 0.1, 1); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { diffuse(g, psi0, 1.0, -0.1, 1); }), ErrorCode::InvalidArgument);
  // d_max = 2: dt alpha d_max = 1 is unstable.
  EXPECT_EQ(code_of([&] { diffuse(g, psi0, 1.0, 0.5, 1); }), ErrorCode::StabilityViolation);
  EXPECT_NO_THROW(diffuse(g, psi0, 1.0, 0.49, 1));
}

}  // namespace
}  // namespace qgraph
