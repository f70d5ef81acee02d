#include "fraclab/eps.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/SVD>

#include "fraclab/fracops.hpp"
#include "fraclab/kernel_norms.hpp"
#include "fraclab/kernels.hpp"
#include "fraclab/norms.hpp"

namespace fraclab {

EpsSystem make_eps_system(Kernel K, MatrixField Omega, double sigma, double eps) {
  if (!(sigma > 0.0 && sigma < 0.5)) throw std::invalid_argument("eps system: sigma must lie in (0, 1/2)");
  if (K.grid() != Omega.grid() || K.m() != Omega.m()) throw std::invalid_argument("eps system: K and Omega mismatch");
  if (K.tag() != KernelTag::anti_self_dual) K.detect_tag();
  if (K.tag() != KernelTag::anti_self_dual) throw std::domain_error("eps system: K must be anti-self-dual");
  K.check_tag();
  Omega.set_tag(Symmetry::antisymmetric);
  Omega.check_tag(1e-12);

  const int n = K.n();
  const double dx = K.grid().spacing();
  MatrixField omega = Omega;
  omega.set_tag(Symmetry::none);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && K.diagonal() == DiagonalPolicy::singular) continue;
      omega.block(i) += dx * K.block(i, j).transpose();
    }
  return EpsSystem{std::move(K), std::move(Omega), std::move(omega), sigma, eps};
}

Eigen::MatrixXd assemble_eps_operator(const EpsSystem& sys) {
  const Kernel& K = sys.K;
  const Grid& g = K.grid();
  const int n = g.n(), m = K.m(), N = n * m;
  const double dx = g.spacing();

  // (-Delta)^{1/4} is circulant; its first column is the image of e_0
  Eigen::VectorXd e0 = Eigen::VectorXd::Zero(n);
  e0[0] = 1.0;
  const Eigen::VectorXd col = frac_laplacian(g, e0, 0.5);

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double d = col[((i - j) % n + n) % n];
      for (int a = 0; a < m; ++a) A(i * m + a, j * m + a) = d;
    }
  A -= dx * K.matrix();
  const bool skip = K.diagonal() == DiagonalPolicy::singular;
  for (int i = 0; i < n; ++i) {
    if (skip) A.block(i * m, i * m, m, m) += dx * K.block(i, i);
    // int K(x,y)^T dy v(x) + Omega v(x) = omega(x) v(x)
    A.block(i * m, i * m, m, m) -= sys.omega.block(i);
  }
  return A;
}

Eigen::MatrixXd mean_zero_basis(int n, int m) {
  // real Fourier modes k = 1..n/2, orthonormal in the plain Euclidean product
  Eigen::MatrixXd U = Eigen::MatrixXd::Zero(n * m, (n - 1) * m);
  const double pi = std::numbers::pi;
  int col = 0;
  for (int a = 0; a < m; ++a) {
    for (int k = 1; k <= n / 2; ++k) {
      const int kinds = (k == n / 2) ? 1 : 2;
      for (int c = 0; c < kinds; ++c) {
        for (int i = 0; i < n; ++i) {
          const double ph = 2.0 * pi * k * i / n;
          const double val = (k == n / 2) ? ((i % 2 == 0) ? 1.0 : -1.0) / std::sqrt(static_cast<double>(n))
                                          : std::sqrt(2.0 / n) * (c == 0 ? std::cos(ph) : std::sin(ph));
          U(i * m + a, col) = val;
        }
        ++col;
      }
    }
  }
  return U;
}

double eps_sigma_min(const EpsSystem& sys) {
  const Eigen::MatrixXd AU = assemble_eps_operator(sys) * mean_zero_basis(sys.K.n(), sys.K.m());
  Eigen::BDCSVD<Eigen::MatrixXd> svd(AU);
  return svd.singularValues().minCoeff();
}

double eps_budget(const Kernel& K, const MatrixField& Omega, double sigma) {
  const Kernel DK = kernel_frac_lap_first_slot(K, sigma);
  const double kn = kernel_besov_norm(DK, {-sigma, 2.0, 2.0, std::nullopt}).value;
  const double on = lp_norm(Omega.grid(), pointwise_magnitude(Omega), 2.0);
  return kn + on;
}

}  // namespace fraclab
