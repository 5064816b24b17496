#include "qgraph/quantum_states.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qgraph/error.hpp"
#include "qgraph/spectra.hpp"

namespace qgraph {

namespace {

[[noreturn]] void invalid_density(const std::string& why) {
  throw ComputeError(ErrorCode::InvalidArgument, "not a density matrix: " + why);
}

// Exactly Hermitian copy: averages the two triangles and drops diagonal
// imaginary parts left by roundoff.
ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(j, i) = std::conj(out(i, j));
    }
  }
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_square() || m_.empty()) invalid_density("must be square and nonempty");
  if (!all_finite(m_)) invalid_density("non-finite entry");
  const double scale = 1.0 + frobenius_norm(m_);
  if (hermitian_defect(m_) > kDensityTolerance * scale) invalid_density("not Hermitian");
  if (std::abs(m_.trace() - Complex{1.0}) > kDensityTolerance) invalid_density("trace is not one");
  if (!is_psd(m_)) invalid_density("not positive semi-definite");
}

ComplexMatrix SpectralMixture::reconstruct() const {
  if (terms.empty()) return {};
  const std::size_t n = terms.front().vector.size();
  ComplexMatrix out(n, n);
  for (const auto& t : terms) out += t.weight * outer(t.vector, t.vector);
  return out;
}

DensityMatrix normalize_to_density(const ComplexMatrix& k) {
  if (!k.is_square()) throw ComputeError(ErrorCode::DimensionMismatch, "matrix is not square");
  const double tr = k.trace().real();
  if (!(tr > 0.0)) throw ComputeError(ErrorCode::DegreeZero, "total degree is zero");
  return DensityMatrix(hermitian_part(k * Complex{1.0 / tr}));
}

DensityMatrix density_from_graph(const WeightedDigraph& g, MatrixFlavor flavor) {
  return normalize_to_density(laplacian(g, flavor));
}

StateClass classify(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  const double fro = frobenius_norm(rho.matrix());
  const double purity = fro * fro;
  const bool pure = std::abs(purity - 1.0) <= kPureTolerance;
  return {pure ? StateKind::Pure : StateKind::Mixed, purity};
}

SpectralMixture spectral_mixture(const DensityMatrix& rho) {
  const auto eig = hermitian_eigen(rho.matrix());
  const double cutoff = kMixtureDropTolerance;
  SpectralMixture mixture;
  for (std::size_t k = eig.values.size(); k-- > 0;) {
    if (eig.values[k] <= cutoff) continue;
    mixture.terms.push_back({eig.values[k], eig.vector(k)});
  }
  return mixture;
}

ComplexVector pure_state_vector(const DensityMatrix& rho) {
  const auto cls = classify(rho);
  if (!cls.is_pure()) {
    throw ComputeError(ErrorCode::NotPure,
                       "state is mixed (purity " + std::to_string(cls.purity) + ")");
  }
  const auto eig = hermitian_eigen(rho.matrix());
  return eig.vector(eig.values.size() - 1);
}

DensityMatrix conjugate_by_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (!u.is_square() || u.rows() != rho.dim()) {
    throw ComputeError(ErrorCode::DimensionMismatch, "unitary dimension does not match the state");
  }
  const ComplexMatrix gram = u.adjoint() * u;
  if (max_abs_diff(gram, ComplexMatrix::identity(u.rows())) > kUnitaryTolerance) {
    throw ComputeError(ErrorCode::NotUnitary, "U^dagger U differs from the identity");
  }
  return DensityMatrix(hermitian_part(u * rho.matrix() * u.adjoint()));
}

PptVerdict ppt_test_2q(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw ComputeError(ErrorCode::DimensionMismatch, "PPT test needs a two-qubit (4x4) state");
  }
  PptVerdict verdict;
  verdict.partial_transpose = partial_transpose_b(rho.matrix());
  const auto values = hermitian_eigenvalues(verdict.partial_transpose);
  verdict.min_eigenvalue = values.front();
  const double scale = 1.0 + frobenius_norm(verdict.partial_transpose);
  verdict.separable = verdict.min_eigenvalue >= -kPsdTolerance * scale;
  verdict.borderline = verdict.separable && verdict.min_eigenvalue < -kPptStrictTolerance * scale;
  return verdict;
}

bool ppt_separable_2q(const DensityMatrix& rho) { return ppt_test_2q(rho).separable; }

}  // namespace qgraph
