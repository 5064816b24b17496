#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qgraph/error.hpp"
#include "qgraph/graph_dsl.hpp"
#include "qgraph/laplacians.hpp"
#include "qgraph/spectra.hpp"

namespace qgraph {
namespace {

constexpr Complex I{0.0, 1.0};

ComplexMatrix phase4_laplacian() {
  return {{2.0, -1.0, 0.0, -I}, {-1.0, 3.0, -I, I}, {0.0, I, 1.0, 0.0}, {I, -I, 0.0, 2.0}};
}

TEST(HermitianEigen, PhaseGraphSpectrum) {
  const auto eig = hermitian_eigen(phase4_laplacian());
  const double expected[] = {0.4384, 1.0, 2.0, 4.5616};
  ASSERT_EQ(eig.values.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(eig.values[k], expected[k], 5e-5);
}

TEST(HermitianEigen, Identity) {
  const auto eig = hermitian_eigen(ComplexMatrix::identity(3));
  for (double v : eig.values) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(HermitianEigen, InvariantsOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 3u, 6u, 10u, 17u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix m = oracle::random_hermitian(n, rng);
      const auto eig = hermitian_eigen(m);
      const double scale = 1.0 + frobenius_norm(m);

      EXPECT_TRUE(std::is_sorted(eig.values.begin(), eig.values.end()));
      EXPECT_LE(max_abs_diff(eig.vectors.adjoint() * eig.vectors, ComplexMatrix::identity(n)), 1e-10);
      EXPECT_LE(eig.residual, 1e-9 * scale);

      ComplexMatrix rebuilt(n, n);
      for (std::size_t k = 0; k < n; ++k) {
        const auto v = eig.vector(k);
        rebuilt += eig.values[k] * outer(v, v);
      }
      EXPECT_LE(max_abs_diff(rebuilt, m), 1e-9);

      double sum = 0.0;
      for (double v : eig.values) sum += v;
      EXPECT_NEAR(sum, m.trace().real(), 1e-9 * scale);

      const auto reference = oracle::eigenvalues(m);
      for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(eig.values[k], reference[k], 1e-9 * scale);
    }
  }
}

TEST(HermitianEigen, PhaseIsCanonical) {
  std::mt19937_64 rng(5);
  const auto eig = hermitian_eigen(oracle::random_hermitian(5, rng));
  for (std::size_t k = 0; k < 5; ++k) {
    const auto v = eig.vector(k);
    std::size_t big = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (std::abs(v[i]) > std::abs(v[big]) + 1e-12) big = i;
    }
    EXPECT_NEAR(v[big].imag(), 0.0, 1e-12);
    EXPECT_GE(v[big].real(), 0.0);
  }
}

TEST(HermitianEigen, RejectsNonHermitian) {
  const ComplexMatrix m{{1.0, 2.0}, {0.0, 1.0}};
  try {
    hermitian_eigen(m);
    FAIL() << "expected NotHermitian";
  } catch (const ComputeError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
  }
  EXPECT_THROW(hermitian_eigen(ComplexMatrix(2, 3)), ComputeError);
}

TEST(Kron, IdentityAndMixedProduct) {
  EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = oracle::random_matrix(2, 2, rng);
    const auto b = oracle::random_matrix(2, 2, rng);
    const auto c = oracle::random_matrix(2, 2, rng);
    const auto d = oracle::random_matrix(2, 2, rng);
    EXPECT_LE(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-12);
    EXPECT_LE(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
    EXPECT_LE(max_abs_diff(kron(a + b, c), kron(a, c) + kron(b, c)), 1e-12);
    EXPECT_LE(max_abs_diff(kron(a, 2.5 * c), 2.5 * kron(a, c)), 1e-12);
  }
}

TEST(Kron, SingleQubitProductPlacesFirstFactorOnTheFastIndex) {
  // Standard row-major Kronecker product: the composite with half entries at
  // (1,1), (1,3), (3,1), (3,3) is rho2 (x) rho1, not rho1 (x) rho2.
  const ComplexMatrix rho1{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix rho2{{0.5, 0.5}, {0.5, 0.5}};
  const ComplexMatrix composite{{0.5, 0.0, 0.5, 0.0}, {0.0, 0.0, 0.0, 0.0}, {0.5, 0.0, 0.5, 0.0}, {0.0, 0.0, 0.0, 0.0}};
  EXPECT_EQ(kron(rho2, rho1), composite);
  EXPECT_NE(kron(rho1, rho2), composite);
}

TEST(PartialTranspose, DiagonalUnchangedAndInvolution) {
  const double d[] = {0.1, 0.2, 0.3, 0.4};
  const auto diag = ComplexMatrix::diagonal(d);
  EXPECT_EQ(partial_transpose_b(diag), diag);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = oracle::random_matrix(4, 4, rng);
    EXPECT_EQ(partial_transpose_b(partial_transpose_b(m)), m);
    const auto h = oracle::random_hermitian(4, rng);
    const auto pt = partial_transpose_b(h);
    EXPECT_LE(hermitian_defect(pt), 1e-15);
    EXPECT_NEAR(std::abs(pt.trace() - h.trace()), 0.0, 1e-15);
  }
  EXPECT_THROW(partial_transpose_b(ComplexMatrix::identity(3)), ComputeError);
}

TEST(PartialTranspose, IndexRule) {
  ComplexMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = Complex(static_cast<double>(r), static_cast<double>(c));
  const auto pt = partial_transpose_b(m);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) EXPECT_EQ(pt(2 * i + j, 2 * k + l), m(2 * i + l, 2 * k + j));
}

TEST(PartialTranspose, BellStateIsNegative) {
  const ComplexMatrix bell{{0.5, 0.0, 0.0, 0.5}, {0.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}, {0.5, 0.0, 0.0, 0.5}};
  EXPECT_EQ(numerical_rank(bell), 1u);
  const auto pt = partial_transpose_b(bell);
  EXPECT_FALSE(is_psd(pt));
  EXPECT_NEAR(oracle::eigenvalues(pt).front(), -0.5, 1e-14);
}

TEST(NumericalRank, SmallCases) {
  EXPECT_EQ(numerical_rank(ComplexMatrix::zeros(3, 3)), 0u);
  EXPECT_EQ(numerical_rank(0.5 * ComplexMatrix::identity(2)), 2u);
}

TEST(IsPsd, Cases) {
  const double d[] = {1.0, -1.0};
  EXPECT_FALSE(is_psd(ComplexMatrix::diagonal(d)));
  EXPECT_TRUE(is_psd(phase4_laplacian()));
  EXPECT_THROW(is_psd(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), ComputeError);
}

TEST(ZeroMultiplicity, UsesRelativeThreshold) {
  const double values[] = {1e-10, 1.5e-8, 3e-8, 2.0};
  EXPECT_EQ(zero_multiplicity(values), 2u);  // cutoff 2e-8
  const double tiny[] = {0.0, 0.0, 0.5};
  EXPECT_EQ(zero_multiplicity(tiny), 2u);
}

TEST(PrincipalSqrt, Branch) {
  const double pi = std::numbers::pi;
  EXPECT_LE(std::abs(principal_sqrt(-I) - std::polar(1.0, -pi / 4)), 1e-15);
  EXPECT_LE(std::abs(principal_sqrt(I) - std::polar(1.0, pi / 4)), 1e-15);
  EXPECT_EQ(principal_sqrt(1.0), Complex(1.0));
  EXPECT_LE(std::abs(principal_sqrt(-4.0) - Complex(0.0, 2.0)), 1e-15);
  EXPECT_LE(std::abs(principal_sqrt(Complex(-4.0, -0.0)) - Complex(0.0, 2.0)), 1e-15);
}

TEST(PrincipalSqrt, SquaresBackInsideBranch) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 2000; ++trial) {
    Complex z(u(rng), u(rng));
    if (std::abs(z) > 10.0) z *= 10.0 / std::abs(z);
    const Complex s = principal_sqrt(z);
    EXPECT_LE(std::abs(s * s - z), 1e-14);
    const double arg = std::arg(s);
    EXPECT_GT(arg, -std::numbers::pi / 2);
    EXPECT_LE(arg, std::numbers::pi / 2);
  }
}

}  // namespace
}  // namespace qgraph
