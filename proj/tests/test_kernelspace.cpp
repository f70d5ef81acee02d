#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <gtest/gtest.h>

#include "fraclab/ensemble.hpp"
#include "fraclab/fracops.hpp"
#include "fraclab/kernel_io.hpp"
#include "fraclab/kernel_norms.hpp"
#include "fraclab/kernels.hpp"
#include "fraclab/profiles.hpp"

using namespace fraclab;
using std::numbers::pi;

namespace {

MatrixField symmetric_Q(const Grid& g, int m, int trial) {
  EnsembleSpec spec;
  spec.seed = 21;
  spec.m = m;
  return sample_trial(spec, g, trial).Q;
}

// K(x, y) = f(y - x) sampled on the grid, finite diagonal.
Kernel translation_kernel(const Grid& g, const std::function<double(double)>& f) {
  Kernel K(g, 1, DiagonalPolicy::finite, 0.0, "f(y-x)");
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) K(i, j) = f(g.point(j) - g.point(i));
  return K;
}

}  // namespace

TEST(KernelDhalf, ConstantQGivesZero) {
  const Grid g = make_grid(8.0, 64);
  const Kernel K = kernel_dhalf(MatrixField::scalar(g, Eigen::VectorXd::Constant(64, 2.5)));
  EXPECT_EQ(K.matrix().cwiseAbs().maxCoeff(), 0.0);
}

TEST(KernelDhalf, LinearQOnTheLine) {
  const Grid g = make_grid(8.0, 64);
  const Kernel K = kernel_dhalf(MatrixField::scalar(g, g.points()), Geometry::line);
  for (int i = 20; i < 44; ++i)
    for (int j = 20; j < 44; ++j) {
      if (i == j) continue;
      const double t = g.point(i) - g.point(j);
      EXPECT_NEAR(K(i, j), (t > 0 ? 1.0 : -1.0) / std::sqrt(std::abs(t)), 1e-13);
    }
  EXPECT_LT(K.anti_self_dual_defect(), 1e-15);
}

TEST(KernelDhalf, AntiSelfDualForSymmetricQ) {
  const Grid g = make_grid(16.0, 128);
  const Kernel K = kernel_dhalf(symmetric_Q(g, 2, 0));
  EXPECT_EQ(K.tag(), KernelTag::anti_self_dual);
  EXPECT_LT(K.anti_self_dual_defect(), 1e-12);
  EXPECT_EQ(K.diagonal(), DiagonalPolicy::singular);
}

TEST(KernelDhalf, SelfDualPartIsSymmetric) {
  const Grid g = make_grid(16.0, 128);
  Kernel K = kernel_dhalf_self_dual(symmetric_Q(g, 1, 1));
  EXPECT_LT(K.symmetric_defect(), 1e-12);
}

TEST(KernelRQ, ZeroAndSymmetry) {
  const Grid g = make_grid(16.0, 128);
  EXPECT_EQ(kernel_RQ(MatrixField::scalar(g, Eigen::VectorXd::Zero(128))).matrix().cwiseAbs().maxCoeff(), 0.0);
  const Kernel R = kernel_RQ(symmetric_Q(g, 1, 2));
  EXPECT_LT((R.matrix() - R.matrix().transpose()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(KernelRQ, MatchesMultiplierIdentity) {
  // For Q = cos(xi0 x) the multiplier algebra gives R o Q o R = -Q + C with C the
  // finite trig sum over the modes where sgn(eta) and sgn(eta +- xi0) differ.
  const Grid g = make_grid(16.0, 512);
  const int k0 = 4;
  const double L = g.length(), xi0 = 2 * pi * k0 / L;
  const Eigen::VectorXd q = g.points().unaryExpr([&](double x) { return std::cos(xi0 * x); });
  const Kernel R = kernel_RQ(MatrixField::scalar(g, q));
  auto C = [&](double x, double y) {
    std::complex<double> s = 0.0;
    for (int k = -k0; k <= k0; ++k) {
      const double eta = 2 * pi * k / L, w = (k == 0 || std::abs(k) == k0) ? 1.0 : 2.0;
      if (k <= 0) s += w * std::exp(std::complex<double>(0.0, (eta + xi0) * x - eta * y));
      if (k >= 0) s += w * std::exp(std::complex<double>(0.0, (eta - xi0) * x - eta * y));
    }
    return s.real() / (2 * L);
  };
  double num = 0.0, den = 0.0;
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) {
      if (i == j) continue;
      const double c = C(g.point(i), g.point(j));
      num += std::pow(R(i, j) - c, 2);
      den += c * c;
    }
  EXPECT_LT(std::sqrt(num / den), 1e-2);
}

TEST(KernelSQ, ExactAntisymmetry) {
  const Grid g = make_grid(16.0, 128);
  const Kernel S = antisymmetrize_SQ(symmetric_Q(g, 1, 3));
  EXPECT_EQ(S.anti_self_dual_defect(), 0.0);
  const Kernel Z = antisymmetrize_SQ(MatrixField::scalar(g, Eigen::VectorXd::Constant(128, 1.0)));
  EXPECT_LT(Z.matrix().cwiseAbs().maxCoeff(), 1e-12);
}

TEST(KernelTRQ, ConstantQGivesZero) {
  const Grid g = make_grid(8.0, 64);
  EXPECT_LT(kernel_TRQ(MatrixField::scalar(g, Eigen::VectorXd::Constant(64, 1.0))).matrix().cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(AdjointMultiply, IdentityAndAntiSelfDuality) {
  const Grid g = make_grid(16.0, 64);
  const Kernel K = kernel_dhalf(symmetric_Q(g, 2, 4));
  EXPECT_EQ(adjoint_multiply(MatrixField::identity(g, 2), K).matrix(), K.matrix());
  MatrixField P(g, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) P.set_entry(a, b, smooth_random_function(g, 30 + 2 * a + b, 1.0, 1.0));
  const Kernel G = adjoint_multiply(P, K);
  EXPECT_LT(G.anti_self_dual_defect(), 1e-10 * K.matrix().cwiseAbs().maxCoeff());
}

TEST(AdjointMultiply, NormBound) {
  const Grid g = make_grid(16.0, 64);
  const Kernel K = kernel_dhalf(symmetric_Q(g, 2, 5));
  const MatrixField P = random_orthogonal_field(g, 2, 77, 1.0);
  MatrixField P2 = P;
  P2 *= 0.5;
  const KernelNormParams np{-0.25, 2.0, 2.0, std::nullopt};
  const double kn = kernel_besov_norm(K, np).value;
  // orthogonal P is a pointwise isometry for the Frobenius norm
  EXPECT_NEAR(kernel_besov_norm(adjoint_multiply(P, K), np).value, kn, 1e-12 * kn);
  EXPECT_LE(kernel_besov_norm(adjoint_multiply(P2, K), np).value, 0.25 * kn * (1 + 1e-12));
}

TEST(FracLapFirstSlot, ConstantInFirstSlot) {
  const Grid g = make_grid(8.0, 64);
  Kernel K(g, 1, DiagonalPolicy::finite, 0.0, "c(y)");
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) K(i, j) = std::sin(g.point(j));
  EXPECT_LT(kernel_frac_lap_first_slot(K, 0.25).matrix().cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_THROW(kernel_frac_lap_first_slot(K, 0.5), std::invalid_argument);
}

TEST(KernelNorm, TranslationInvariantOracle) {
  // |K(., . + h)|_{L^p} = |f(h)| (2R)^{1/p} for K(x, y) = f(y - x), f periodic on the window
  const Grid g = make_grid(8.0, 64);
  auto f = [&](double t) { return std::exp(std::cos(2 * pi * t / g.length())) + 0.1 * std::sin(2 * pi * t / g.length()); };
  const Kernel K = translation_kernel(g, f);
  for (const KernelNormParams np : {KernelNormParams{0.3, 2.0, 2.0, std::nullopt}, KernelNormParams{-0.25, 4.0, 3.0, std::nullopt}}) {
    double sum = 0.0;
    const int n = g.n();
    for (int k = -n / 2; k <= n / 2; ++k) {
      if (k == 0) continue;
      const double h = k * g.spacing();
      const double w = std::abs(k) == n / 2 ? 0.5 : 1.0;
      sum += w * g.spacing() * std::pow(std::abs(h), 1.0 - np.q * np.s) *
             std::pow(f(h) * std::pow(g.length(), 1.0 / np.p), np.q);
    }
    EXPECT_NEAR(kernel_besov_norm(K, np).value, std::pow(sum, 1.0 / np.q), 1e-12);
  }
}

TEST(KernelNorm, ZeroHomogeneityAndValidation) {
  const Grid g = make_grid(16.0, 64);
  Kernel K = kernel_dhalf(symmetric_Q(g, 1, 6));
  const KernelNormParams np{-0.25, 4.0, 2.0, std::nullopt};
  const double a = kernel_besov_norm(K, np).value;
  K *= -3.0;
  EXPECT_NEAR(kernel_besov_norm(K, np).value, 3.0 * a, 1e-12 * a);
  K *= 0.0;
  EXPECT_EQ(kernel_besov_norm(K, np).value, 0.0);
  EXPECT_THROW(validate({0.0, 1.0, 2.0, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(validate({0.0, 2.0, 2.0, 0.5}), std::invalid_argument);
}

TEST(KernelNorm, SlotsAgreeForAntiSelfDualScalars) {
  const Grid g = make_grid(16.0, 128);
  const Kernel K = kernel_dhalf(symmetric_Q(g, 1, 7));
  const KernelNormParams np{-0.25, 2.0, 2.0, std::nullopt};
  EXPECT_NEAR(kernel_besov_norm(K, np, Diagonal::first_slot).value, kernel_besov_norm(K, np).value, 1e-12);
}

TEST(KernelIO, RoundTrip) {
  const Grid g = make_grid(16.0, 32);
  const Kernel K = kernel_dhalf(symmetric_Q(g, 2, 8));
  const std::string path = (std::filesystem::temp_directory_path() / "fraclab_roundtrip.fck").string();
  write_kernel(K, path);
  std::ifstream in(path, std::ios::binary);
  char magic[4];
  in.read(magic, 4);
  EXPECT_EQ(std::string(magic, 4), "FCK1");
  const Kernel back = read_kernel(path, 16.0);
  EXPECT_EQ(back.n(), 32);
  EXPECT_EQ(back.m(), 2);
  EXPECT_EQ(back.gamma(), K.gamma());
  EXPECT_EQ(back.label(), K.label());
  EXPECT_EQ(back.matrix(), K.matrix());
  std::filesystem::remove(path);
}
