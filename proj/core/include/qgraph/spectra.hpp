#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qgraph/matrix.hpp"

namespace qgraph {

/// Eigenvalues at or below kZeroThreshold * max(1, lambda_max) count as zero.
inline constexpr double kZeroThreshold = 1e-8;
/// is_psd accepts lambda_min >= -kPsdTolerance * (1 + ||M||_F).
inline constexpr double kPsdTolerance = 1e-9;
/// Default Hermiticity gate, relative to 1 + ||M||_F.
inline constexpr double kHermitianTolerance = 1e-10;

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm is <= tolerance * ||M||_F.
  double tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Full eigendecomposition of a Hermitian matrix.
///
/// values are ascending; column k of vectors is the unit eigenvector for
/// values[k], with its phase fixed so that the first component of largest
/// modulus is real and nonnegative. residual = max_k ||M v_k - lambda_k v_k||_2.
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors;
  double residual = 0.0;

  ComplexVector vector(std::size_t k) const { return vectors.column(k); }
};

/// Cyclic complex Jacobi. Throws NotHermitian if
/// ||M - M^dagger||_max > hermitian_tol * (1 + ||M||_F), NotConverged if the
/// sweep budget runs out.
HermitianEigen hermitian_eigen(const ComplexMatrix& m, double hermitian_tol = kHermitianTolerance,
                               JacobiOptions options = {});

/// Eigenvalues only; same algorithm.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double hermitian_tol = kHermitianTolerance);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transpose of the second factor of a 2 (x) 2 operator:
/// out[(i,j),(k,l)] = in[(i,l),(k,j)] with row index 2i + j.
ComplexMatrix partial_transpose_b(const ComplexMatrix& m);

/// Number of eigenvalues strictly above tol * max(1, lambda_max).
std::size_t numerical_rank(const ComplexMatrix& m, double tol = kZeroThreshold);

bool is_psd(const ComplexMatrix& m, double tol = kPsdTolerance);

/// Count of eigenvalues treated as zero under kZeroThreshold.
std::size_t zero_multiplicity(std::span<const double> ascending_values,
                              double tol = kZeroThreshold);

/// Square root with arg in (-pi/2, pi/2]; the negative real axis maps to +i sqrt|z|
/// regardless of the sign of the zero imaginary part.
Complex principal_sqrt(Complex z) noexcept;

}  // namespace qgraph
