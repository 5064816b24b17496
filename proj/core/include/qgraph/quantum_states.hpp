#pragma once

#include <cstddef>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/laplacians.hpp"
#include "qgraph/matrix.hpp"

namespace qgraph {

inline constexpr double kPureTolerance = 1e-9;
inline constexpr double kUnitaryTolerance = 1e-10;
/// Density matrices must be Hermitian and have unit trace to this tolerance.
inline constexpr double kDensityTolerance = 1e-12;
/// Mixture terms with weight at or below this are roundoff and dropped.
inline constexpr double kMixtureDropTolerance = 1e-12;
/// PPT verdicts with lambda_min below -kPptStrictTolerance * scale but still
/// inside the PSD tolerance are flagged borderline.
inline constexpr double kPptStrictTolerance = 1e-12;

/// Trace-one Hermitian PSD matrix. The constructor validates and throws
/// ComputeError(InvalidArgument) if any invariant fails.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }
  Complex operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

 private:
  ComplexMatrix m_;
};

enum class StateKind { Pure, Mixed };

struct StateClass {
  StateKind kind = StateKind::Mixed;
  double purity = 0.0;  ///< Tr(rho^2)

  bool is_pure() const noexcept { return kind == StateKind::Pure; }
};

struct MixtureTerm {
  double weight = 0.0;
  ComplexVector vector;
};

/// rho = sum p_i |psi_i><psi_i| with zero-weight terms dropped.
struct SpectralMixture {
  std::vector<MixtureTerm> terms;

  ComplexMatrix reconstruct() const;
};

/// Scale a nonzero Hermitian PSD matrix to unit trace. Throws DegreeZero when
/// the trace is not positive.
DensityMatrix normalize_to_density(const ComplexMatrix& k);

/// K(g, flavor) / trace(K). For graphs without loops trace(K) is the total
/// degree. Throws DegreeZero when K vanishes.
DensityMatrix density_from_graph(const WeightedDigraph& g, MatrixFlavor flavor);

StateClass classify(const DensityMatrix& rho);

/// Eigen-expansion of rho, heaviest term first.
SpectralMixture spectral_mixture(const DensityMatrix& rho);

/// Unit psi with rho = psi psi^dagger (phase canonical). Throws NotPure.
ComplexVector pure_state_vector(const DensityMatrix& rho);

/// U rho U^dagger. Throws DimensionMismatch, NotUnitary.
DensityMatrix conjugate_by_unitary(const DensityMatrix& rho, const ComplexMatrix& u);

struct PptVerdict {
  bool separable = false;
  bool borderline = false;
  double min_eigenvalue = 0.0;  ///< of the partial transpose
  ComplexMatrix partial_transpose;
};

/// Peres-Horodecki test on a two-qubit state. Throws DimensionMismatch.
PptVerdict ppt_test_2q(const DensityMatrix& rho);
bool ppt_separable_2q(const DensityMatrix& rho);

}  // namespace qgraph
