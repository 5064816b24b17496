#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qgraph/entanglers.hpp"
#include "qgraph/error.hpp"
#include "qgraph/spectra.hpp"

namespace qgraph {
namespace {

constexpr BellKind kBellKinds[] = {BellKind::PhiMinus, BellKind::PhiPlus, BellKind::PsiMinus, BellKind::PsiPlus};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const ComputeError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ComputeError thrown";
  return ErrorCode::InvalidArgument;
}

Complex random_nonzero(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> modulus(0.2, 3.0);
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  return std::polar(modulus(rng), angle(rng));
}

/// Projector onto (e_p + sign e_q) / sqrt(2).
ComplexMatrix bell_projector(std::size_t p, std::size_t q, double sign) {
  ComplexMatrix m(4, 4);
  m(p, p) = 0.5;
  m(q, q) = 0.5;
  m(p, q) = 0.5 * sign;
  m(q, p) = 0.5 * sign;
  return m;
}

TEST(ApplyFn, Primitives) {
  const ComplexMatrix x{{1.0, 2.0}, {3.0, 4.0}};
  const auto id = MatrixFunctionSpec::identity();
  EXPECT_EQ(apply_fn(id, x), x);
  EXPECT_EQ(apply_fn(id.then_right_mul(matrix_j()), x), (ComplexMatrix{{0.0, 2.0}, {0.0, 4.0}}));
  EXPECT_EQ(apply_fn(id.then_left_mul(matrix_j()), x), (ComplexMatrix{{0.0, 0.0}, {3.0, 4.0}}));
  EXPECT_EQ(apply_fn(id.then_add(ComplexMatrix::identity(2)), x), (ComplexMatrix{{2.0, 2.0}, {3.0, 5.0}}));
  EXPECT_EQ(apply_fn(id.then_zero_diagonal(), x), (ComplexMatrix{{0.0, 2.0}, {3.0, 0.0}}));
  EXPECT_EQ(apply_fn(id.then_dagger(), x), x.adjoint());
  EXPECT_EQ(apply_fn(MatrixFunctionSpec::zero(), x), ComplexMatrix::zeros(2, 2));
  EXPECT_EQ(code_of([&] { apply_fn(id, ComplexMatrix::identity(3)); }), ErrorCode::DimensionMismatch);
}

TEST(ApplyFn, DaggerOnlyLast) {
  const auto bad = [] { MatrixFunctionSpec::identity().then_dagger().then_right_mul(matrix_j()); };
  EXPECT_EQ(code_of(bad), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { MatrixFunctionSpec::identity().then_add(ComplexMatrix::identity(3)); }),
            ErrorCode::DimensionMismatch);
}

TEST(ApplyFn, ConjugatedSwapSummand) {
  // f(X) = (Z X^dagger Z) J assembled from the step primitives.
  const auto zd = matrix_z().adjoint();
  const auto f4 = MatrixFunctionSpec::identity()
                      .then_right_mul(zd)
                      .then_left_mul(zd)
                      .then_left_mul(matrix_j())
                      .then_dagger();
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = oracle::random_matrix(2, 2, rng);
    const auto expected = matrix_z() * x.adjoint() * matrix_z() * matrix_j();
    EXPECT_LE(max_abs_diff(apply_fn(f4, x), expected), 1e-14);
  }
}

TEST(ProductFg, IdentityAndZeroFunctions) {
  const ComplexMatrix ag{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix ah{{0.0, Complex(0.0, 1.0)}, {Complex(0.0, -1.0), 0.0}};
  const auto id = MatrixFunctionSpec::identity();
  const auto zero = MatrixFunctionSpec::zero();
  EXPECT_EQ(product_fg(ag, ah, id, zero), kron(ag, ah));
  EXPECT_EQ(product_fg(ag, ah, zero, id), kron(ComplexMatrix::identity(2), ah));
  EXPECT_EQ(product_fg(ag, ah, zero, zero), ComplexMatrix::zeros(4, 4));
  EXPECT_EQ(code_of([&] { product_fg(matrix_p(), ah, id, id); }), ErrorCode::NotHermitian);
  EXPECT_EQ(code_of([&] { product_fg(ComplexMatrix::identity(3), ah, id, id); }), ErrorCode::DimensionMismatch);
}

TEST(ProductMulti, TwoTermRecipeGivesAntidiagonal) {
  const ComplexMatrix a1{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix a2{{1.0, 0.0}, {0.0, 0.0}};
  const auto aprod = product_multi(a1, a2, two_term_bell_recipe());
  ComplexMatrix expected(4, 4);
  expected(0, 3) = 1.0;
  expected(3, 0) = 1.0;
  EXPECT_EQ(aprod, expected);

  const auto q = density_from_product(aprod, MatrixFlavor::Signless);
  EXPECT_EQ(q.matrix(), bell_projector(0, 3, 1.0));
  const auto l = density_from_product(aprod, MatrixFlavor::Combinatorial);
  EXPECT_EQ(l.matrix(), bell_projector(0, 3, -1.0));
  for (const auto& rho : {q, l}) {
    EXPECT_TRUE(classify(rho).is_pure());
    EXPECT_FALSE(ppt_separable_2q(rho));
  }
}

TEST(ProductMulti, Errors) {
  const ComplexMatrix a{{0.0, 1.0}, {1.0, 0.0}};
  EXPECT_EQ(code_of([&] { product_multi(a, a, ProductRecipe{}); }), ErrorCode::InvalidArgument);

  const auto id = MatrixFunctionSpec::identity();
  ProductRecipe one_sided;
  one_sided.pairs = {{id.then_right_mul(matrix_j()), id}};
  EXPECT_EQ(code_of([&] { product_multi(a, a, one_sided); }), ErrorCode::NotHermitianResult);

  ProductRecipe diagonal;
  diagonal.pairs = {{id.then_add(ComplexMatrix::identity(2)), id.then_add(ComplexMatrix::identity(2))}};
  EXPECT_EQ(code_of([&] { product_multi(a, a, diagonal); }), ErrorCode::NonzeroDiagonal);
  diagonal.require_zero_diagonal = false;
  EXPECT_NO_THROW(product_multi(a, a, diagonal));

  ProductRecipe zero;
  zero.pairs = {{MatrixFunctionSpec::zero(), MatrixFunctionSpec::zero()}};
  EXPECT_EQ(product_multi(a, a, zero), ComplexMatrix::zeros(4, 4));
}

TEST(ProductMulti, VertexWeightedPhiCorner) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex w1 = random_nonzero(rng), w2 = random_nonzero(rng);
    const Complex w1p = random_nonzero(rng), w2p = random_nonzero(rng);
    const auto aprod = product_multi(vertex_weighted_k2(w1, w2), vertex_weighted_k2(w1p, w2p),
                                     bell_recipe(BellKind::PhiPlus));
    // Corner is sqrt(conj(w1) conj(w1p) w2 w2p) up to the principal branch of each factor.
    const Complex corner = principal_sqrt(std::conj(w1)) * principal_sqrt(w2) *
                           principal_sqrt(std::conj(w1p)) * principal_sqrt(w2p);
    EXPECT_LE(std::abs(aprod(0, 3) - corner), 1e-12);
    EXPECT_NEAR(std::abs(corner * corner - std::conj(w1 * w1p) * w2 * w2p), 0.0, 1e-10);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (!((i == 0 && j == 3) || (i == 3 && j == 0))) EXPECT_EQ(aprod(i, j), Complex{});
  }
}

TEST(DensityFromProduct, DegreesAndErrors) {
  ComplexMatrix a(4, 4);
  a(0, 0) = 2.0;
  a(1, 2) = Complex(0.0, 1.0);
  a(2, 1) = Complex(0.0, -1.0);
  const auto rho = density_from_product(a, MatrixFlavor::Signless);
  // diagonal 2|a00| = 4, unit edge degrees 1, 1; trace 6.
  EXPECT_NEAR(rho(0, 0).real(), 4.0 / 6.0, 1e-15);
  EXPECT_NEAR(rho(1, 1).real(), 1.0 / 6.0, 1e-15);
  EXPECT_LE(std::abs(rho(1, 2) - Complex(0.0, 1.0 / 6.0)), 1e-15);

  EXPECT_EQ(code_of([] { density_from_product(ComplexMatrix::zeros(4, 4), MatrixFlavor::Signless); }),
            ErrorCode::DegreeZero);
  EXPECT_EQ(code_of([] { density_from_product(ComplexMatrix(4, 3), MatrixFlavor::Signless); }),
            ErrorCode::DimensionMismatch);
  ComplexMatrix skew(4, 4);
  skew(0, 1) = 1.0;
  EXPECT_EQ(code_of([&] { density_from_product(skew, MatrixFlavor::Signless); }), ErrorCode::NotHermitian);
  EXPECT_EQ(code_of([&] { density_from_product(a, MatrixFlavor::Signless, std::vector<double>{1.0}); }),
            ErrorCode::DimensionMismatch);
}

TEST(BellPair, UnitWeightsGiveBellProjectors) {
  EXPECT_EQ(bell_pair(BellKind::PhiMinus, 1.0, 1.0, 1.0, 1.0).matrix(), bell_projector(0, 3, -1.0));
  EXPECT_EQ(bell_pair(BellKind::PhiPlus, 1.0, 1.0, 1.0, 1.0).matrix(), bell_projector(0, 3, 1.0));
  EXPECT_EQ(bell_pair(BellKind::PsiMinus, 1.0, 1.0, 1.0, 1.0).matrix(), bell_projector(1, 2, -1.0));
  EXPECT_EQ(bell_pair(BellKind::PsiPlus, 1.0, 1.0, 1.0, 1.0).matrix(), bell_projector(1, 2, 1.0));
  for (const auto kind : kBellKinds) {
    EXPECT_EQ(bell_pair_from_recipe(kind, 1.0, 1.0, 1.0, 1.0).matrix(), bell_pair(kind, 1.0, 1.0, 1.0, 1.0).matrix());
  }
  EXPECT_EQ(code_of([] { bell_pair(BellKind::PhiPlus, 0.0, 1.0, 1.0, 1.0); }), ErrorCode::InvalidArgument);
}

TEST(BellPair, RecipeMatchesClosedFormAndIsEntangled) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex w1 = random_nonzero(rng), w2 = random_nonzero(rng);
    const Complex w1p = random_nonzero(rng), w2p = random_nonzero(rng);
    for (const auto kind : kBellKinds) {
      const auto closed = bell_pair(kind, w1, w2, w1p, w2p);
      const auto built = bell_pair_from_recipe(kind, w1, w2, w1p, w2p);
      EXPECT_LE(max_abs_diff(closed.matrix(), built.matrix()), 1e-12);
      EXPECT_TRUE(classify(closed).is_pure());
      EXPECT_EQ(numerical_rank(closed.matrix()), 1u);
      EXPECT_FALSE(ppt_separable_2q(closed));
      EXPECT_LT(oracle::eigenvalues(partial_transpose_b(closed.matrix())).front(), -1e-6);
    }
  }
}

TEST(BellPair, ClosedFormEntries) {
  const Complex w1(1.0, 1.0), w2(-2.0, 0.0), w1p(0.0, 3.0), w2p(0.5, -0.5);
  const auto rho = bell_pair(BellKind::PsiMinus, w1, w2, w1p, w2p);
  const Complex a = principal_sqrt(std::conj(w1)) * principal_sqrt(w2);
  const Complex ap = principal_sqrt(std::conj(w1p)) * principal_sqrt(w2p);
  const double d1 = std::abs(w2 * w1p);
  const double d2 = std::abs(w1 * w2p);
  EXPECT_NEAR(rho(1, 1).real(), d1 / (d1 + d2), 1e-15);
  EXPECT_NEAR(rho(2, 2).real(), d2 / (d1 + d2), 1e-15);
  EXPECT_LE(std::abs(rho(1, 2) + a * std::conj(ap) / (d1 + d2)), 1e-15);
  EXPECT_EQ(rho(0, 0), Complex{});
  EXPECT_EQ(rho(3, 3), Complex{});
}

TEST(WernerFromLoops, CombinatorialIsBellAndSignlessIsWerner) {
  for (const double r : {0.1, 0.5, 1.0, 10.0}) {
    const auto pair = werner_from_loops(1.0, 1.0, r, r);
    EXPECT_EQ(pair.combinatorial.matrix(), bell_projector(1, 2, -1.0));
    const double norm = 2.0 * (1.0 + 2.0 * r);
    ComplexMatrix expected(4, 4);
    expected(0, 0) = 2.0 * r / norm;
    expected(3, 3) = 2.0 * r / norm;
    expected(1, 1) = 1.0 / norm;
    expected(2, 2) = 1.0 / norm;
    expected(1, 2) = 1.0 / norm;
    expected(2, 1) = 1.0 / norm;
    EXPECT_LE(max_abs_diff(pair.signless.matrix(), expected), 1e-15);
    EXPECT_LT(classify(pair.signless).purity, 1.0);
  }
}

TEST(WernerFromLoops, GeneralWeights) {
  std::mt19937_64 rng(54);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::uniform_real_distribution<double> loop(0.05, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex w = std::polar(1.0, angle(rng));
    const Complex wp = std::polar(1.0, angle(rng));
    const double r1 = loop(rng), r2 = loop(rng);
    const auto pair = werner_from_loops(w, wp, r1, r2);
    const Complex z = w * std::conj(wp);

    const auto& l = pair.combinatorial.matrix();
    EXPECT_LE(std::abs(l(1, 2) + 0.5 * z), 1e-15);
    EXPECT_EQ(l(0, 0), Complex{});
    EXPECT_EQ(l(3, 3), Complex{});
    EXPECT_TRUE(classify(pair.combinatorial).is_pure());

    const auto& q = pair.signless.matrix();
    const double norm = 2.0 * (1.0 + r1 + r2);
    EXPECT_NEAR(q(0, 0).real(), 2.0 * r1 / norm, 1e-15);
    EXPECT_NEAR(q(3, 3).real(), 2.0 * r2 / norm, 1e-15);
    EXPECT_LE(std::abs(q(1, 2) - z / norm), 1e-15);

    // The partial transpose moves z onto the (0,3) corner: separable iff 4 r1 r2 >= 1.
    if (std::abs(4.0 * r1 * r2 - 1.0) > 1e-6) {
      EXPECT_EQ(ppt_separable_2q(pair.signless), 4.0 * r1 * r2 > 1.0) << r1 << " " << r2;
    }
  }
}

TEST(WernerFromLoops, SeparabilityCrossesAsLoopsGrow) {
  EXPECT_FALSE(ppt_separable_2q(werner_from_loops(1.0, 1.0, 0.1, 0.1).signless));
  EXPECT_TRUE(ppt_separable_2q(werner_from_loops(1.0, 1.0, 10.0, 10.0).signless));
  const auto at_threshold = ppt_test_2q(werner_from_loops(1.0, 1.0, 0.5, 0.5).signless);
  EXPECT_NEAR(at_threshold.min_eigenvalue, 0.0, 1e-15);
  EXPECT_TRUE(at_threshold.separable);
}

TEST(WernerFromLoops, RejectsInvalidWeights) {
  EXPECT_EQ(code_of([] { werner_from_loops(2.0, 1.0, 1.0, 1.0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { werner_from_loops(1.0, 1.0, 0.0, 1.0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { werner_from_loops(1.0, 1.0, 1.0, -1.0); }), ErrorCode::InvalidArgument);
}

TEST(LoopedRecipe, FourTermSumIsNotHermitian) {
  // Literal four-term construction on the looped factors: the f_3/g_3 and
  // f_4/g_4 terms leave unpaired off-diagonal entries.
  const Complex w = std::polar(1.0, 0.3);
  const Complex wp = std::polar(1.0, -1.1);
  const ComplexMatrix ag{{0.7, w}, {std::conj(w), 0.0}};
  const ComplexMatrix ah{{0.0, wp}, {std::conj(wp), 1.3}};
  EXPECT_EQ(code_of([&] { product_multi(ag, ah, looped_recipe(w, wp)); }), ErrorCode::NotHermitianResult);
  EXPECT_LE(std::abs(werner_adjacency(w, wp, 0.7, 1.3)(1, 2) - w * std::conj(wp)), 1e-15);
}

TEST(SeparabilityExperiment, NoEntangledProducts) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto report = product_separability_experiment(500, seed);
    EXPECT_EQ(report.entangled, 0u) << seed;
    EXPECT_TRUE(report.counterexamples.empty());
    EXPECT_EQ(report.separable + report.entangled + report.degenerate, 504u);
    ASSERT_EQ(report.injected.size(), 4u);
    for (const auto& c : report.injected) EXPECT_TRUE(c.degenerate || c.separable) << c.label;
  }
}

TEST(SeparabilityExperiment, InjectedSubcases) {
  const auto report = product_separability_experiment(1, 42);
  ASSERT_EQ(report.injected.size(), 4u);
  EXPECT_EQ(report.injected[0].label, "subcase-I");
  EXPECT_FALSE(report.injected[0].degenerate);
  EXPECT_TRUE(report.injected[1].degenerate);
  EXPECT_FALSE(report.injected[2].degenerate);
  EXPECT_FALSE(report.injected[3].degenerate);
  for (const auto& c : report.injected) {
    if (c.degenerate) continue;
    EXPECT_LE(hermitian_defect(c.f_value), 1e-15);
    EXPECT_EQ(c.g_value(0, 0), Complex{});
    EXPECT_EQ(c.g_value(1, 1), Complex{});
  }
}

TEST(SeparabilityExperiment, Deterministic) {
  const auto a = product_separability_experiment(200, 7);
  const auto b = product_separability_experiment(200, 7);
  EXPECT_EQ(a.worst_min_eigenvalue, b.worst_min_eigenvalue);
  EXPECT_EQ(a.separable, b.separable);
  EXPECT_EQ(code_of([] { product_separability_experiment(0, 1); }), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace qgraph
