#include "qgraph/entanglers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qgraph/error.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/spectra.hpp"

namespace qgraph {

namespace {

constexpr double kProductTolerance = 1e-12;

void require_2x2(const ComplexMatrix& m, const char* what) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw ComputeError(ErrorCode::DimensionMismatch, std::string(what) + ": expected a 2x2 matrix");
  }
}

void require_hermitian_input(const ComplexMatrix& m, const char* what) {
  require_2x2(m, what);
  if (hermitian_defect(m) > kHermitianTolerance * (1.0 + frobenius_norm(m))) {
    throw ComputeError(ErrorCode::NotHermitian, std::string(what) + ": adjacency is not Hermitian");
  }
}

bool operand_step(MatrixStep::Op op) {
  return op == MatrixStep::Op::RightMul || op == MatrixStep::Op::LeftMul ||
         op == MatrixStep::Op::Add;
}

}  // namespace

ComplexMatrix matrix_j() { return {{0.0, 0.0}, {0.0, 1.0}}; }
ComplexMatrix matrix_p() { return {{0.0, 1.0}, {0.0, 0.0}}; }
ComplexMatrix matrix_z() { return {{0.0, -1.0}, {1.0, 0.0}}; }
ComplexMatrix matrix_k(Complex w) { return {{0.0, std::conj(w)}, {0.0, 0.0}}; }

std::string_view to_string(MatrixStep::Op op) noexcept {
  switch (op) {
    case MatrixStep::Op::Identity: return "identity";
    case MatrixStep::Op::RightMul: return "right_mul";
    case MatrixStep::Op::LeftMul: return "left_mul";
    case MatrixStep::Op::Add: return "add";
    case MatrixStep::Op::ZeroDiagonal: return "zero_diagonal";
    case MatrixStep::Op::Dagger: return "dagger";
  }
  return "identity";
}

MatrixFunctionSpec::MatrixFunctionSpec(std::vector<MatrixStep> steps) : steps_(std::move(steps)) {
  validate();
}

void MatrixFunctionSpec::validate() const {
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    const auto& s = steps_[k];
    if (s.op == MatrixStep::Op::Dagger && k + 1 != steps_.size()) {
      throw ComputeError(ErrorCode::InvalidArgument, "dagger must be the last step of a matrix function");
    }
    if (operand_step(s.op)) {
      require_2x2(s.operand, "matrix function operand");
      if (!all_finite(s.operand)) {
        throw ComputeError(ErrorCode::InvalidArgument, "matrix function operand is not finite");
      }
    }
  }
}

MatrixFunctionSpec MatrixFunctionSpec::zero() {
  return identity().then_right_mul(ComplexMatrix::zeros(2, 2));
}

MatrixFunctionSpec MatrixFunctionSpec::then(MatrixStep step) const {
  auto steps = steps_;
  steps.push_back(std::move(step));
  return MatrixFunctionSpec(std::move(steps));
}

MatrixFunctionSpec MatrixFunctionSpec::then_right_mul(ComplexMatrix c) const {
  return then({MatrixStep::Op::RightMul, std::move(c)});
}
MatrixFunctionSpec MatrixFunctionSpec::then_left_mul(ComplexMatrix c) const {
  return then({MatrixStep::Op::LeftMul, std::move(c)});
}
MatrixFunctionSpec MatrixFunctionSpec::then_add(ComplexMatrix c) const {
  return then({MatrixStep::Op::Add, std::move(c)});
}
MatrixFunctionSpec MatrixFunctionSpec::then_zero_diagonal() const {
  return then({MatrixStep::Op::ZeroDiagonal, {}});
}
MatrixFunctionSpec MatrixFunctionSpec::then_dagger() const { return then({MatrixStep::Op::Dagger, {}}); }

ComplexMatrix apply_fn(const MatrixFunctionSpec& fn, const ComplexMatrix& x) {
  require_2x2(x, "apply_fn");
  ComplexMatrix y = x;
  for (const auto& step : fn.steps()) {
    switch (step.op) {
      case MatrixStep::Op::Identity: break;
      case MatrixStep::Op::RightMul: y = y * step.operand; break;
      case MatrixStep::Op::LeftMul: y = step.operand * y; break;
      case MatrixStep::Op::Add: y += step.operand; break;
      case MatrixStep::Op::ZeroDiagonal:
        y(0, 0) = 0.0;
        y(1, 1) = 0.0;
        break;
      case MatrixStep::Op::Dagger: y = y.adjoint(); break;
    }
  }
  return y;
}

ComplexMatrix product_fg(const ComplexMatrix& ag, const ComplexMatrix& ah,
                         const MatrixFunctionSpec& f, const MatrixFunctionSpec& g) {
  require_hermitian_input(ag, "product_fg A(G)");
  require_hermitian_input(ah, "product_fg A(H)");
  return kron(ag, apply_fn(f, ah)) + kron(ComplexMatrix::identity(2), apply_fn(g, ah));
}

ComplexMatrix product_multi(const ComplexMatrix& ag, const ComplexMatrix& ah,
                            const ProductRecipe& recipe) {
  if (recipe.pairs.empty()) throw ComputeError(ErrorCode::InvalidArgument, "recipe has no terms");
  require_hermitian_input(ag, "product_multi A(G)");
  require_hermitian_input(ah, "product_multi A(H)");
  ComplexMatrix sum(4, 4);
  for (const auto& [f, g] : recipe.pairs) sum += kron(apply_fn(f, ag), apply_fn(g, ah));

  const double scale = 1.0 + frobenius_norm(sum);
  if (hermitian_defect(sum) > kProductTolerance * scale) {
    throw ComputeError(ErrorCode::NotHermitianResult, "product adjacency is not Hermitian");
  }
  if (recipe.require_zero_diagonal) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (std::abs(sum(i, i)) > kProductTolerance * scale) {
        throw ComputeError(ErrorCode::NonzeroDiagonal,
                           "product adjacency has a nonzero diagonal entry at " + std::to_string(i + 1));
      }
    }
  }
  return sum;
}

DensityMatrix density_from_product(const ComplexMatrix& aprod, MatrixFlavor flavor,
                                   std::optional<std::vector<double>> vertex_moduli) {
  if (!aprod.is_square()) throw ComputeError(ErrorCode::DimensionMismatch, "product adjacency is not square");
  const std::size_t n = aprod.rows();
  if (vertex_moduli && vertex_moduli->size() != n) {
    throw ComputeError(ErrorCode::DimensionMismatch, "vertex moduli length does not match");
  }
  if (hermitian_defect(aprod) > kHermitianTolerance * (1.0 + frobenius_norm(aprod))) {
    throw ComputeError(ErrorCode::NotHermitian, "product adjacency is not Hermitian");
  }
  ComplexMatrix k(n, n);
  const double s = flavor == MatrixFlavor::Signless ? 1.0 : -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d = std::abs(aprod(i, i));
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || aprod(i, j) == Complex{}) continue;
      d += vertex_moduli ? (*vertex_moduli)[j] : std::abs(aprod(i, j));
    }
    k(i, i) = d;
    for (std::size_t j = 0; j < n; ++j) k(i, j) += s * aprod(i, j);
  }
  return normalize_to_density(k);
}

std::vector<double> product_vertex_moduli(std::span<const Complex> g_weights,
                                          std::span<const Complex> h_weights) {
  std::vector<double> out;
  out.reserve(g_weights.size() * h_weights.size());
  for (const auto& a : g_weights)
    for (const auto& b : h_weights) out.push_back(std::abs(a * b));
  return out;
}

std::string_view to_string(BellKind kind) noexcept {
  switch (kind) {
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PsiMinus: return "psi-";
    case BellKind::PsiPlus: return "psi+";
  }
  return "phi-";
}

MatrixFlavor bell_flavor(BellKind kind) noexcept {
  return kind == BellKind::PhiMinus || kind == BellKind::PsiMinus ? MatrixFlavor::Combinatorial
                                                                   : MatrixFlavor::Signless;
}

namespace {

bool is_phi(BellKind kind) { return kind == BellKind::PhiMinus || kind == BellKind::PhiPlus; }

void require_nonzero(std::initializer_list<Complex> weights) {
  for (const auto& w : weights) {
    if (w == Complex{} || !is_finite(w)) {
      throw ComputeError(ErrorCode::InvalidArgument, "vertex weights must be finite and nonzero");
    }
  }
}

}  // namespace

ComplexMatrix vertex_weighted_k2(Complex w1, Complex w2) {
  const Complex a = vertex_arc_weight(w1, w2);
  return {{0.0, a}, {std::conj(a), 0.0}};
}

DensityMatrix bell_pair(BellKind kind, Complex w1, Complex w2, Complex w1p, Complex w2p) {
  require_nonzero({w1, w2, w1p, w2p});
  const Complex a = vertex_arc_weight(w1, w2);
  const Complex ap = vertex_arc_weight(w1p, w2p);
  const double s = bell_flavor(kind) == MatrixFlavor::Signless ? 1.0 : -1.0;

  ComplexMatrix m(4, 4);
  std::size_t p = 0;
  std::size_t q = 3;
  Complex corner = a * ap;
  double dp = std::abs(w2 * w2p);
  double dq = std::abs(w1 * w1p);
  if (!is_phi(kind)) {
    p = 1;
    q = 2;
    corner = a * std::conj(ap);
    dp = std::abs(w2 * w1p);
    dq = std::abs(w1 * w2p);
  }
  const double norm = dp + dq;
  m(p, p) = dp / norm;
  m(q, q) = dq / norm;
  m(p, q) = s * corner / norm;
  m(q, p) = std::conj(m(p, q));
  return DensityMatrix(std::move(m));
}

ProductRecipe bell_recipe(BellKind kind) {
  const auto xj = MatrixFunctionSpec::identity().then_right_mul(matrix_j());
  const auto xj_dagger = xj.then_dagger();
  ProductRecipe recipe;
  if (is_phi(kind)) {
    recipe.pairs = {{xj, xj}, {xj_dagger, xj_dagger}};
  } else {
    recipe.pairs = {{xj, xj_dagger}, {xj_dagger, xj}};
  }
  return recipe;
}

DensityMatrix bell_pair_from_recipe(BellKind kind, Complex w1, Complex w2, Complex w1p,
                                    Complex w2p) {
  require_nonzero({w1, w2, w1p, w2p});
  const auto aprod = product_multi(vertex_weighted_k2(w1, w2), vertex_weighted_k2(w1p, w2p),
                                   bell_recipe(kind));
  const Complex gw[] = {w1, w2};
  const Complex hw[] = {w1p, w2p};
  return density_from_product(aprod, bell_flavor(kind), product_vertex_moduli(gw, hw));
}

ProductRecipe two_term_bell_recipe() {
  const auto xj = MatrixFunctionSpec::identity().then_right_mul(matrix_j());
  const auto xp = MatrixFunctionSpec::identity().then_right_mul(matrix_p());
  const auto shifted =
      MatrixFunctionSpec::identity().then_add(ComplexMatrix::identity(2)).then_right_mul(matrix_p().adjoint());
  ProductRecipe recipe;
  recipe.pairs = {{xj, xp}, {xj.then_dagger(), shifted}};
  return recipe;
}

ProductRecipe looped_recipe(Complex w, Complex wp) {
  const auto id = MatrixFunctionSpec::identity();
  const auto f1 = id.then_right_mul(matrix_j());
  const auto f2 = id.then_left_mul(matrix_j());
  const auto f3 = id.then_right_mul(matrix_k(w).adjoint());
  // (Z X^dagger Z) J == (J Z^dagger X Z^dagger)^dagger
  const ComplexMatrix zd = matrix_z().adjoint();
  const auto f4 = id.then_right_mul(zd).then_left_mul(zd).then_left_mul(matrix_j()).then_dagger();
  const auto g3 = id.then_right_mul(matrix_k(wp).adjoint());
  ProductRecipe recipe;
  recipe.pairs = {{f1, f2}, {f2, f1}, {f3, g3}, {f4, f4}};
  recipe.require_zero_diagonal = false;
  return recipe;
}

ComplexMatrix werner_adjacency(Complex w, Complex wp, double r1, double r2) {
  ComplexMatrix a(4, 4);
  a(0, 0) = r1;
  a(3, 3) = r2;
  a(1, 2) = w * std::conj(wp);
  a(2, 1) = std::conj(w) * wp;
  return a;
}

WernerPair werner_from_loops(Complex w, Complex wp, double r1, double r2) {
  for (const auto& z : {w, wp}) {
    if (!is_finite(z) || std::abs(std::abs(z) - 1.0) > kUnitModulusTolerance) {
      throw ComputeError(ErrorCode::InvalidArgument, "edge weights must have modulus one");
    }
  }
  if (!(r1 > 0.0) || !(r2 > 0.0) || !std::isfinite(r1) || !std::isfinite(r2)) {
    throw ComputeError(ErrorCode::InvalidArgument, "loop weights must be positive");
  }
  const auto a = werner_adjacency(w, wp, r1, r2);
  return {density_from_product(a, MatrixFlavor::Combinatorial),
          density_from_product(a, MatrixFlavor::Signless)};
}

namespace {

class SeparabilitySampler {
 public:
  explicit SeparabilitySampler(std::uint64_t seed) : rng_(seed) {}

  Complex phase() { return std::polar(1.0, angle_(rng_)); }

  Complex bounded() { return std::polar(modulus_(rng_), angle_(rng_)); }

  ComplexMatrix bounded_matrix() {
    ComplexMatrix c(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) c(i, j) = bounded();
    return c;
  }

  ComplexMatrix bounded_hermitian() {
    ComplexMatrix h(2, 2);
    h(0, 0) = real_(rng_);
    h(1, 1) = real_(rng_);
    h(0, 1) = bounded();
    h(1, 0) = std::conj(h(0, 1));
    return h;
  }

  // Either C X C^dagger or a constant Hermitian matrix; both keep f(X) Hermitian.
  MatrixFunctionSpec hermitian_chain() {
    if (coin_(rng_)) {
      const auto c = bounded_matrix();
      return MatrixFunctionSpec::identity().then_left_mul(c).then_right_mul(c.adjoint());
    }
    return MatrixFunctionSpec::zero().then_add(bounded_hermitian());
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> angle_{0.0, 2.0 * std::numbers::pi};
  std::uniform_real_distribution<double> modulus_{0.0, 2.0};
  std::uniform_real_distribution<double> real_{-2.0, 2.0};
  std::bernoulli_distribution coin_{0.5};
};

ComplexMatrix edge_unit_k2(Complex omega) { return {{0.0, omega}, {std::conj(omega), 0.0}}; }

SeparabilityCase run_case(std::string label, Complex omega, const ComplexMatrix& ah,
                       const MatrixFunctionSpec& f, const MatrixFunctionSpec& g) {
  SeparabilityCase c;
  c.label = std::move(label);
  c.omega = omega;
  c.f_value = apply_fn(f, ah);
  c.g_value = apply_fn(g, ah);
  const auto aprod = product_fg(edge_unit_k2(omega), ah, f, g);
  try {
    const auto rho = density_from_product(aprod, MatrixFlavor::Combinatorial);
    const auto verdict = ppt_test_2q(rho);
    c.separable = verdict.separable;
    c.borderline = verdict.borderline;
    c.min_eigenvalue = verdict.min_eigenvalue;
  } catch (const ComputeError& e) {
    if (e.code() != ErrorCode::DegreeZero) throw;
    c.degenerate = true;
  }
  return c;
}

MatrixFunctionSpec constant(const ComplexMatrix& m) { return MatrixFunctionSpec::zero().then_add(m); }

}  // namespace

SeparabilityReport product_separability_experiment(std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw ComputeError(ErrorCode::InvalidArgument, "trials must be positive");
  SeparabilitySampler sampler(seed);
  SeparabilityReport report;
  report.trials = trials;
  report.seed = seed;

  auto record = [&report](const SeparabilityCase& c) {
    if (c.degenerate) {
      ++report.degenerate;
      return;
    }
    report.worst_min_eigenvalue = std::min(report.worst_min_eigenvalue, c.min_eigenvalue);
    if (c.borderline) ++report.borderline;
    if (c.separable) {
      ++report.separable;
    } else {
      ++report.entangled;
      report.counterexamples.push_back(c);
    }
  };

  for (std::size_t t = 0; t < trials; ++t) {
    const Complex omega = sampler.phase();
    const auto ah = edge_unit_k2(sampler.phase());
    const auto f = sampler.hermitian_chain();
    const auto g = sampler.hermitian_chain().then_zero_diagonal();
    record(run_case("random", omega, ah, f, g));
  }

  // Degenerate shapes where the 2x2 leading block of the partial transpose is singular.
  const Complex omega = sampler.phase();
  const auto ah = edge_unit_k2(sampler.phase());
  const Complex g12 = sampler.bounded() + Complex{0.5, 0.0};
  const ComplexMatrix hollow{{0.0, g12}, {std::conj(g12), 0.0}};
  const ComplexMatrix zero2 = ComplexMatrix::zeros(2, 2);
  const double f11 = 1.0 + std::abs(sampler.bounded());
  const double f22 = -1.0 - std::abs(sampler.bounded());
  const ComplexMatrix only_f11{{f11, 0.0}, {0.0, 0.0}};
  const ComplexMatrix only_f22{{0.0, 0.0}, {0.0, f22}};

  report.injected.push_back(run_case("subcase-I", omega, ah, constant(zero2), constant(hollow)));
  report.injected.push_back(run_case("subcase-II", omega, ah, constant(zero2), constant(zero2)));
  report.injected.push_back(run_case("subcase-III", omega, ah, constant(only_f11), constant(zero2)));
  report.injected.push_back(run_case("subcase-IV", omega, ah, constant(only_f22), constant(zero2)));
  for (const auto& c : report.injected) record(c);
  return report;
}

}  // namespace qgraph
