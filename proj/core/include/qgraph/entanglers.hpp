#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qgraph/laplacians.hpp"
#include "qgraph/matrix.hpp"
#include "qgraph/quantum_states.hpp"

namespace qgraph {

/// [[0,0],[0,1]]
ComplexMatrix matrix_j();
/// [[0,1],[0,0]]
ComplexMatrix matrix_p();
/// [[0,-1],[1,0]]
ComplexMatrix matrix_z();
/// [[0, conj(w)],[0,0]]
ComplexMatrix matrix_k(Complex w);

/// One primitive of a matrix function on 2x2 adjacency matrices.
struct MatrixStep {
  enum class Op {
    Identity,      ///< X
    RightMul,      ///< X C
    LeftMul,       ///< C X
    Add,           ///< X + C
    ZeroDiagonal,  ///< X with its diagonal cleared
    Dagger,        ///< X^dagger, only as the final step
  };

  Op op = Op::Identity;
  ComplexMatrix operand;  ///< 2x2 for RightMul/LeftMul/Add, empty otherwise
};

std::string_view to_string(MatrixStep::Op op) noexcept;

/// Composable description of f(X). Steps run left to right; a Dagger step,
/// if any, must be the last one and applies to the whole composition.
class MatrixFunctionSpec {
 public:
  MatrixFunctionSpec() = default;
  explicit MatrixFunctionSpec(std::vector<MatrixStep> steps);

  static MatrixFunctionSpec identity() { return {}; }
  static MatrixFunctionSpec zero();
  MatrixFunctionSpec then_right_mul(ComplexMatrix c) const;
  MatrixFunctionSpec then_left_mul(ComplexMatrix c) const;
  MatrixFunctionSpec then_add(ComplexMatrix c) const;
  MatrixFunctionSpec then_zero_diagonal() const;
  MatrixFunctionSpec then_dagger() const;

  const std::vector<MatrixStep>& steps() const noexcept { return steps_; }

 private:
  MatrixFunctionSpec then(MatrixStep step) const;
  void validate() const;

  std::vector<MatrixStep> steps_;
};

struct ProductRecipe {
  std::vector<std::pair<MatrixFunctionSpec, MatrixFunctionSpec>> pairs;
  bool require_zero_diagonal = true;
};

/// Evaluate fn on a 2x2 matrix. Throws DimensionMismatch.
ComplexMatrix apply_fn(const MatrixFunctionSpec& fn, const ComplexMatrix& x);

/// A(G) (x) f(A(H)) + I_2 (x) g(A(H)). Throws DimensionMismatch, NotHermitian.
ComplexMatrix product_fg(const ComplexMatrix& ag, const ComplexMatrix& ah,
                         const MatrixFunctionSpec& f, const MatrixFunctionSpec& g);

/// sum_i f_i(A(G)) (x) g_i(A(H)). Throws InvalidArgument (no pairs),
/// NotHermitianResult, NonzeroDiagonal (when the recipe requires a hollow result).
ComplexMatrix product_multi(const ComplexMatrix& ag, const ComplexMatrix& ah,
                            const ProductRecipe& recipe);

/// Density of a product adjacency. Degrees are off-diagonal row modulus sums
/// plus |A_ii| (a diagonal entry is a loop). When vertex_moduli is given
/// (vertex-weighted factors), an off-diagonal neighbour j contributes
/// vertex_moduli[j] instead of |A_ij|. K = D -+ A is normalized by its trace.
/// Throws NotHermitian, DegreeZero, DimensionMismatch.
DensityMatrix density_from_product(const ComplexMatrix& aprod, MatrixFlavor flavor,
                                   std::optional<std::vector<double>> vertex_moduli = std::nullopt);

/// |w_a w'_b| for the product vertex (a, b), row index 2a + b.
std::vector<double> product_vertex_moduli(std::span<const Complex> g_weights,
                                          std::span<const Complex> h_weights);

enum class BellKind { PhiMinus, PhiPlus, PsiMinus, PsiPlus };

std::string_view to_string(BellKind kind) noexcept;
MatrixFlavor bell_flavor(BellKind kind) noexcept;

/// Closed-form two-qubit density built from vertex-weighted K_2 factors with
/// weights (w1, w2) and (w1p, w2p). Unit weights give the Bell projectors.
/// Throws InvalidArgument on a zero weight.
DensityMatrix bell_pair(BellKind kind, Complex w1, Complex w2, Complex w1p, Complex w2p);

/// f_1 = XJ, f_2 = (XJ)^dagger with g_1 = f_1, g_2 = f_2 (Phi) or g_1 = f_2,
/// g_2 = f_1 (Psi).
ProductRecipe bell_recipe(BellKind kind);

/// Adjacency of the vertex-weighted K_2 with arc 1 -> 2.
ComplexMatrix vertex_weighted_k2(Complex w1, Complex w2);

/// Same state as bell_pair, assembled through product_multi and density_from_product.
DensityMatrix bell_pair_from_recipe(BellKind kind, Complex w1, Complex w2, Complex w1p,
                                    Complex w2p);

/// f_1 = XJ, g_1 = XP; f_2 = (XJ)^dagger, g_2 = (X + I) P^dagger.
ProductRecipe two_term_bell_recipe();

/// Four-term looped recipe: f_1 = XJ, f_2 = JX, f_3 = X K^dagger,
/// f_4 = (Z X^dagger Z) J; g_1 = f_2, g_2 = f_1, g_3 = X K'^dagger, g_4 = f_4.
ProductRecipe looped_recipe(Complex w, Complex wp);

/// Looped-factor product diag(r1, 0, 0, r2) with off-diagonal w conj(wp).
ComplexMatrix werner_adjacency(Complex w, Complex wp, double r1, double r2);

struct WernerPair {
  DensityMatrix combinatorial;  ///< Bell-type state from L
  DensityMatrix signless;       ///< Werner-type state from Q
};

/// Throws InvalidArgument unless |w| = |wp| = 1 and r1, r2 > 0.
WernerPair werner_from_loops(Complex w, Complex wp, double r1, double r2);

struct SeparabilityCase {
  std::string label;  ///< "random" or "subcase-I".."subcase-IV"
  Complex omega;
  ComplexMatrix f_value;
  ComplexMatrix g_value;
  bool degenerate = false;  ///< product adjacency vanished, no state defined
  bool separable = true;
  bool borderline = false;
  double min_eigenvalue = 0.0;
};

struct SeparabilityReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t separable = 0;
  std::size_t entangled = 0;
  std::size_t borderline = 0;
  std::size_t degenerate = 0;
  double worst_min_eigenvalue = 0.0;
  std::vector<SeparabilityCase> injected;
  std::vector<SeparabilityCase> counterexamples;
};

/// Random single-qubit factors and f/g from the admissible family (f(A(H))
/// Hermitian, g(A(H)) hollow Hermitian), combined with product_fg and tested
/// for PPT. Degenerate subcases are injected after the random trials.
/// Throws InvalidArgument for trials == 0.
SeparabilityReport product_separability_experiment(std::size_t trials, std::uint64_t seed);

}  // namespace qgraph
