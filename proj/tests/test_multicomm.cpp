#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fraclab/conventions.hpp"
#include "fraclab/ensemble.hpp"
#include "fraclab/eps.hpp"
#include "fraclab/fracops.hpp"
#include "fraclab/kernels.hpp"
#include "fraclab/multicomm.hpp"
#include "fraclab/named_ops.hpp"
#include "fraclab/roots.hpp"

using namespace fraclab;
using std::numbers::pi;

namespace {

double max_abs(const VectorField& f) { return f.data().cwiseAbs().maxCoeff(); }

VectorField random_v(const Grid& g, int m, std::uint64_t seed) {
  VectorField v(g, m);
  for (int a = 0; a < m; ++a) v.set_component(a, smooth_random_function(g, seed + a, 1.0, 1.0));
  return v;
}

}  // namespace

TEST(ApplyTK, SineKernelConvolution) {
  // int sin(x - y) cos(y) dy = pi sin(x) over one period; the transpose term integrates sin to zero
  const Grid g = make_grid(pi, 64);
  Kernel K(g, 1, DiagonalPolicy::finite, 0.0, "sin(x-y)");
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) K(i, j) = std::sin(g.point(i) - g.point(j));
  K.detect_tag();
  ASSERT_EQ(K.tag(), KernelTag::anti_self_dual);
  const VectorField v = VectorField::from_function(g, [](double x) { return std::cos(x); });
  const VectorField out = apply_TK(K, v);
  for (int i = 0; i < 64; ++i) EXPECT_NEAR(out(i, 0), pi * std::sin(g.point(i)), 1e-12);
}

TEST(ApplyTK, ZeroKernel) {
  const Grid g = make_grid(8.0, 32);
  const Kernel K(g, 2, DiagonalPolicy::finite, 0.0, "0");
  EXPECT_EQ(max_abs(apply_TK(K, random_v(g, 2, 3))), 0.0);
}

TEST(ApplyTK, MatchesThreeCommutatorPipeline) {
  const Grid g = make_grid(16.0, 512);
  EnsembleSpec spec;
  spec.seed = 13;
  const EnsembleSample s = sample_trial(spec, g, 0);
  const VectorField lhs = apply_TK(kernel_dhalf(s.Q), s.v);
  const VectorField rhs = c_sigma(0.5) * build_named_operator("T3", s.Q).apply(s.v);
  EXPECT_LT(relative_l2(lhs, rhs), 5e-2);
}

TEST(Duality, RandomAntiSelfDualKernel) {
  const Grid g = make_grid(8.0, 64);
  const Kernel K = random_anti_self_dual_kernel(g, 2, 5);
  const VectorField phi = random_v(g, 2, 40), v = random_v(g, 2, 50);
  const DualityPair d = duality_pairing(phi, K, v);
  const double scale = std::abs(d.lhs) + std::abs(d.rhs) + 1.0;
  EXPECT_LT(std::abs(d.lhs - d.rhs), 1e-10 * scale);
}

TEST(Duality, ConstantTestFunction) {
  const Grid g = make_grid(8.0, 64);
  const Kernel K = random_anti_self_dual_kernel(g, 1, 6);
  const VectorField phi = VectorField::from_function(g, [](double) { return 1.0; });
  const DualityPair d = duality_pairing(phi, K, random_v(g, 1, 60));
  EXPECT_NEAR(d.rhs, 0.0, 1e-14);
  EXPECT_NEAR(d.lhs, 0.0, 1e-10);
}

TEST(FQ, ZeroAndSingleMode) {
  const Grid g = make_grid(4 * pi, 256);  // xi = 1 is a window mode
  EXPECT_EQ(max_abs(compute_FQ(MatrixField::scalar(g, Eigen::VectorXd::Zero(256)), FQRoute::spectral)), 0.0);
  const Eigen::VectorXd q = g.points().array().cos();
  const VectorField out = compute_FQ(MatrixField::scalar(g, q), FQRoute::spectral);
  for (int i = 0; i < g.n(); ++i) EXPECT_NEAR(out(i, 0), std::sin(g.point(i)), 1e-12);
}

TEST(Stability, IdentityP) {
  const Grid g = make_grid(8.0, 64);
  const Kernel K = random_anti_self_dual_kernel(g, 2, 7);
  const VectorField v = random_v(g, 2, 70);
  const StabilityPieces s = stability_decompose(MatrixField::identity(g, 2), K, v);
  EXPECT_LT(max_abs(s.g), 1e-13);
  EXPECT_LT(max_abs(s.tg - apply_TK(K, v)), 1e-13);
}

TEST(Stability, DecompositionResidual) {
  const Grid g = make_grid(8.0, 64);
  const Kernel K = random_anti_self_dual_kernel(g, 3, 8);
  const MatrixField P = random_orthogonal_field(g, 3, 80, 1.0);
  const VectorField v = random_v(g, 3, 81);
  const StabilityPieces s = stability_decompose(P, K, v);
  const VectorField lhs = apply(P, apply_TK(K, v));
  EXPECT_LT(max_abs(lhs - s.tg - s.g), 1e-9 * (max_abs(lhs) + 1.0));
}

TEST(Stability, RejectsNonOrthogonalP) {
  const Grid g = make_grid(8.0, 32);
  const Kernel K = random_anti_self_dual_kernel(g, 2, 9);
  MatrixField P = MatrixField::identity(g, 2);
  P *= 2.0;
  EXPECT_ANY_THROW(stability_decompose(P, K, random_v(g, 2, 90)));
}

TEST(CompensationRatio, DegenerateAndScaleInvariant) {
  const Grid g = make_grid(16.0, 128);
  EnsembleSpec spec;
  const EnsembleSample s = sample_trial(spec, g, 0);
  Kernel K = kernel_dhalf(s.Q);
  const CompensationRatio a = compensation_ratio(K, s.v, 0.25, 4.0, 2.0, 2.0);
  EXPECT_EQ(a.status, RatioStatus::ok);
  Kernel K2 = K;
  K2 *= 3.0;
  const CompensationRatio b = compensation_ratio(K2, 0.5 * s.v, 0.25, 4.0, 2.0, 2.0);
  EXPECT_NEAR(b.ratio, a.ratio, 1e-12 * a.ratio);
  K *= 0.0;
  EXPECT_EQ(compensation_ratio(K, s.v, 0.25, 4.0, 2.0, 2.0).status, RatioStatus::degenerate);
}

TEST(Eps, PureFractionalLaplacian) {
  const Grid g = make_grid(8.0, 64);
  const Kernel K(g, 2, DiagonalPolicy::finite, 0.0, "0");
  const EpsSystem sys = make_eps_system(K, MatrixField(g, 2, Symmetry::antisymmetric), 0.25, 0.0);
  EXPECT_NEAR(eps_sigma_min(sys), std::sqrt(pi / 8.0), 1e-10);
}

TEST(Eps, MeanZeroBasisIsOrthonormal) {
  const Eigen::MatrixXd U = mean_zero_basis(16, 2);
  EXPECT_EQ(U.cols(), 30);
  EXPECT_LT((U.transpose() * U - Eigen::MatrixXd::Identity(30, 30)).norm(), 1e-12);
  EXPECT_LT((Eigen::RowVectorXd::Ones(32) * U).norm(), 1e-12);
}

TEST(Eps, RejectsSymmetricOmega) {
  const Grid g = make_grid(8.0, 32);
  const Kernel K(g, 2, DiagonalPolicy::finite, 0.0, "0");
  MatrixField Om = MatrixField::identity(g, 2);
  EXPECT_ANY_THROW(make_eps_system(K, Om, 0.25, 0.0));
}

TEST(Roots, HighPrecisionRoot) {
  // reference root from an arbitrary-precision secant solve
  const RootResult r = solve_root(-0.25);
  ASSERT_TRUE(r.bracketed);
  EXPECT_NEAR(r.b, 0.451166267666648605168076473076, 1e-13);
  EXPECT_LE(std::abs(r.residual), 1e-12);
}

TEST(Roots, BelowHalfAcrossRange) {
  for (int k = 0; k < 25; ++k) {
    const double x = -0.49 + 0.48 * k / 24.0;
    const RootResult r = solve_root(x);
    ASSERT_TRUE(r.bracketed) << x;
    EXPECT_GT(r.b, 0.0);
    EXPECT_LT(r.b, 0.5);
    EXPECT_LE(std::abs(root_equation(x, r.b)), 1e-12);
  }
}
