#include "qgraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qgraph/error.hpp"

namespace qgraph {

namespace {

void require_hermitian(const ComplexMatrix& m, double tol, const char* what) {
  if (!m.is_square()) {
    throw ComputeError(ErrorCode::DimensionMismatch, std::string(what) + ": matrix is not square");
  }
  if (!all_finite(m)) {
    throw ComputeError(ErrorCode::InvalidArgument, std::string(what) + ": non-finite entry");
  }
  const double defect = hermitian_defect(m);
  if (defect > tol * (1.0 + frobenius_norm(m))) {
    throw ComputeError(ErrorCode::NotHermitian,
                       std::string(what) + ": matrix is not Hermitian (defect " +
                           std::to_string(defect) + ")");
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) acc += std::norm(a(i, j));
  return std::sqrt(acc);
}

// One Jacobi rotation annihilating a(p,q). The unitary is R = Phi * G where
// Phi = diag(1, e^{-i phi}) on (p,q) makes the pivot real and G is the usual
// real symmetric rotation.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex r_pp = c;
  const Complex r_pq = s;
  const Complex r_qp = -s * std::conj(phase);
  const Complex r_qq = c * std::conj(phase);

  const std::size_t n = a.rows();
  // a <- a R
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * r_pp + akq * r_qp;
    a(k, q) = akp * r_pq + akq * r_qq;
  }
  // a <- R^dagger a
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(r_pp) * apk + std::conj(r_qp) * aqk;
    a(q, k) = std::conj(r_pq) * apk + std::conj(r_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * r_pp + vkq * r_qp;
    v(k, q) = vkp * r_pq + vkq * r_qq;
  }
}

void canonicalize_phase(ComplexMatrix& vectors, std::size_t col) {
  const std::size_t n = vectors.rows();
  double largest = 0.0;
  for (std::size_t i = 0; i < n; ++i) largest = std::max(largest, std::abs(vectors(i, col)));
  if (largest == 0.0) return;
  // Ties within roundoff resolve to the first index.
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(vectors(i, col)) >= largest - 1e-10) {
      pivot = i;
      break;
    }
  }
  const Complex z = vectors(pivot, col);
  const Complex unphase = std::conj(z) / std::abs(z);
  for (std::size_t i = 0; i < n; ++i) vectors(i, col) *= unphase;
  vectors(pivot, col) = std::abs(vectors(pivot, col));
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& m, double hermitian_tol,
                               JacobiOptions options) {
  require_hermitian(m, hermitian_tol, "hermitian_eigen");
  const std::size_t n = m.rows();

  // Work on the exactly Hermitian part so the rotations see a consistent matrix.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = frobenius_norm(a);
  const double target = options.tolerance * scale;
  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweep++ >= options.max_sweeps) {
      throw ComputeError(ErrorCode::NotConverged, "hermitian_eigen: Jacobi sweeps exhausted");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    canonicalize_phase(out.vectors, k);
  }

  for (std::size_t k = 0; k < n; ++k) {
    const ComplexVector vk = out.vectors.column(k);
    ComplexVector r = m * vk;
    for (std::size_t i = 0; i < n; ++i) r[i] -= out.values[k] * vk[i];
    out.residual = std::max(out.residual, norm2(r));
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol) {
  return hermitian_eigen(m, hermitian_tol).values;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw ComputeError(ErrorCode::DimensionMismatch, "partial_transpose_b: expected a 4x4 matrix");
  }
  ComplexMatrix out(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + j, 2 * k + l) = m(2 * i + l, 2 * k + j);
  return out;
}

std::size_t zero_multiplicity(std::span<const double> ascending_values, double tol) {
  if (ascending_values.empty()) return 0;
  const double cutoff = tol * std::max(1.0, ascending_values.back());
  return static_cast<std::size_t>(std::count_if(ascending_values.begin(), ascending_values.end(),
                                                [&](double x) { return x <= cutoff; }));
}

std::size_t numerical_rank(const ComplexMatrix& m, double tol) {
  const auto values = hermitian_eigenvalues(m);
  return values.size() - zero_multiplicity(values, tol);
}

bool is_psd(const ComplexMatrix& m, double tol) {
  const auto values = hermitian_eigenvalues(m);
  if (values.empty()) return true;
  return values.front() >= -tol * (1.0 + frobenius_norm(m));
}

Complex principal_sqrt(Complex z) noexcept {
  if (z.imag() == 0.0) {
    if (z.real() >= 0.0) return {std::sqrt(z.real()), 0.0};
    return {0.0, std::sqrt(-z.real())};
  }
  return std::sqrt(z);
}

}  // namespace qgraph
