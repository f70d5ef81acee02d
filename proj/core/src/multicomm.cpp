#include "fraclab/multicomm.hpp"

#include <cmath>
#include <stdexcept>

#include "fraclab/conventions.hpp"
#include "fraclab/fracops.hpp"
#include "fraclab/kernels.hpp"
#include "fraclab/profiles.hpp"

namespace fraclab {

namespace {

void require_match(const Kernel& K, const VectorField& v, const char* what) {
  if (K.grid() != v.grid() || K.m() != v.m()) throw std::invalid_argument(std::string(what) + ": grid or dimension mismatch");
}

// Block-diagonal part sum_j dx K(x_i, y_j)^T, diagonal cell per the kernel policy.
std::vector<Eigen::MatrixXd> transpose_row_sums(const Kernel& K) {
  const int n = K.n(), m = K.m();
  const bool skip = K.diagonal() == DiagonalPolicy::singular;
  std::vector<Eigen::MatrixXd> out(n, Eigen::MatrixXd::Zero(m, m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (skip && i == j) continue;
      out[i] += K.block(i, j).transpose();
    }
    out[i] *= K.grid().spacing();
  }
  return out;
}

VectorField matrix_as_vector(const MatrixField& Q) { return VectorField(Q.grid(), Q.m() * Q.m(), Q.data()); }

}  // namespace

VectorField apply_TK(const Kernel& K, const VectorField& v, DiagonalRule rule) {
  require_match(K, v, "apply_TK");
  const int n = K.n(), m = K.m();
  const double dx = K.grid().spacing();
  VectorField out = integral_apply(K, v);
  const auto T = transpose_row_sums(K);
  for (int i = 0; i < n; ++i) out.data().segment(i * m, m) += T[i] * v.data().segment(i * m, m);
  if (rule == DiagonalRule::pair_corrected) {
    const VectorField dv = derivative(v);
    for (int i = 0; i < n; ++i) {
      const Eigen::MatrixXd b = dx * (K.block(i, (i + n - 1) % n) - K.block(i, (i + 1) % n)) / 2.0;
      out.data().segment(i * m, m) -= dx * b * dv.data().segment(i * m, m);
    }
  }
  return out;
}

DualityPair duality_pairing(const VectorField& phi, const Kernel& K, const VectorField& v) {
  require_match(K, v, "duality_pairing");
  require_match(K, phi, "duality_pairing");
  const int n = K.n(), m = K.m();
  const double dx = K.grid().spacing();
  DualityPair d{inner(phi, apply_TK(K, v)), 0.0};
  const bool skip = K.diagonal() == DiagonalPolicy::singular;
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (skip && i == j) continue;
      const Eigen::VectorXd diff = phi.data().segment(i * m, m) - phi.data().segment(j * m, m);
      acc += diff.dot(K.block(i, j) * v.data().segment(j * m, m));
    }
  d.rhs = acc * dx * dx;
  return d;
}

VectorField compute_FQ(const MatrixField& Q, FQRoute route) {
  if (Q.m() != 1) throw std::invalid_argument("compute_FQ: scalar Q only");
  if (route == FQRoute::kernel) return compute_FQ_from_kernel(kernel_RQ(Q), Q);
  const Grid& g = Q.grid();
  Eigen::VectorXd f = -riesz(g, frac_laplacian(g, Q.entry(0, 0), 0.5));
  return VectorField::scalar(g, f);
}

VectorField compute_FQ_from_kernel(const Kernel& RQ, const MatrixField& Q) {
  if (Q.m() != 1 || RQ.m() != 1 || RQ.grid() != Q.grid()) throw std::invalid_argument("compute_FQ_from_kernel: mismatch");
  const Grid& g = Q.grid();
  const int n = g.n();
  const Eigen::VectorXd k = even_power_profile(g, 1.5);
  const Eigen::VectorXd h = hilbert_profile(g);
  // kappa is the periodic lift of pi sgn(t) |t|^{-1/2}; the product of two
  // periodized kernels is not the periodization of their product
  Eigen::VectorXd kappa = Eigen::VectorXd::Zero(n);
  for (int j = 1; j < n; ++j)
    if (j != n / 2) kappa[j] = k[j] / h[j];
  Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int z = 0; z < n; ++z)
      if (z != i) acc += RQ(i, z) * kappa[offset(i, z, n)];
    f[i] = acc * g.spacing() / c_sigma(0.5);
  }
  return VectorField::scalar(g, f);
}

StabilityPieces stability_decompose(const MatrixField& P, const Kernel& K, const VectorField& v) {
  require_match(K, v, "stability_decompose");
  if (P.grid() != K.grid() || P.m() != K.m()) throw std::invalid_argument("stability_decompose: P mismatch");
  const int n = K.n(), m = K.m();
  const double dx = K.grid().spacing();
  for (int i = 0; i < n; ++i) {
    const double e = (P.block(i).transpose() * P.block(i) - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
    if (e > 1e-10) throw std::domain_error("stability_decompose: P is not pointwise orthogonal");
  }
  const Kernel G = adjoint_multiply(P, K);
  StabilityPieces out{apply_TK(G, apply(P, v)), VectorField(v.grid(), m)};
  // sum_j (P_i - P_j) K_ij^T = P_i sum_j K_ij^T - sum_j P_j K_ij^T
  const auto T = transpose_row_sums(K);
  const bool skip = K.diagonal() == DiagonalPolicy::singular;
  const RowMatrix& M = K.matrix();
  const Eigen::VectorXd& Pd = P.data();
  Eigen::MatrixXd acc(m, m);
  for (int i = 0; i < n; ++i) {
    acc.noalias() = P.block(i) * T[i];
    for (int j = 0; j < n; ++j) {
      if (skip && i == j) continue;
      // (P_j K_ij^T)(a, b) = sum_c P_j(a, c) K_ij(b, c)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          double t = 0.0;
          for (int c = 0; c < m; ++c) t += Pd[(j * m + a) * m + c] * M(i * m + b, j * m + c);
          acc(a, b) -= dx * t;
        }
    }
    out.g.data().segment(i * m, m) = acc * v.data().segment(i * m, m);
  }
  return out;
}

const char* to_string(RatioStatus s) {
  switch (s) {
    case RatioStatus::ok: return "ok";
    case RatioStatus::degenerate: return "degenerate";
    case RatioStatus::hypothesis_violation: return "hypothesis_violation";
  }
  return "?";
}

namespace {

double finish(CompensationRatio& r) {
  const double den = r.kernel_norm * r.v_norm;
  if (!(den > 0.0)) {
    r.status = RatioStatus::degenerate;
    r.ratio = 0.0;
    r.note = "zero denominator";
  } else {
    r.ratio = r.numerator / den;
  }
  return r.ratio;
}

VectorField mean_removed(const VectorField& f, double& removed) {
  const Eigen::VectorXd mean = integrate(f) / f.grid().length();
  removed = mean.norm();
  return remove_mean(f);
}

}  // namespace

CompensationRatio compensation_ratio(const Kernel& K, const VectorField& v, double sigma, double p, double q, double r,
                                     DiagonalRule rule) {
  CompensationRatio out;
  const double rprime = r > 1.0 ? r / (r - 1.0) : kInf;
  if (!(r > 1.0) || !(p > rprime) || !(q >= 2.0) || !(sigma > 0.0)) {
    out.status = RatioStatus::hypothesis_violation;
    out.note = "requires r > 1, p > r', q >= 2, sigma > 0";
    return out;
  }
  const VectorField t = mean_removed(apply_TK(K, v, rule), out.removed_mean);
  const double target_p = r * p / (p + r);
  const double target_q = q / (q - 1.0);
  out.numerator = dyadic_besov(t, -(2.0 / q - 1.0 + sigma), target_p, target_q).value;
  const NormResult kn = kernel_besov_norm(K, {-sigma, p, q, std::nullopt});
  out.kernel_norm = kn.value;
  out.kernel_truncation = kn.truncation;
  out.v_norm = lp_norm(v, r).value;
  finish(out);
  return out;
}

CompensationRatio three_commutator_ratio(const Kernel& K, const MatrixField& Q, const VectorField& v) {
  CompensationRatio out;
  const VectorField t = mean_removed(apply_TK(K, v), out.removed_mean);
  out.numerator = sobolev_spectral(t, -0.5).value;
  out.kernel_norm = sobolev_spectral(matrix_as_vector(Q), 0.5).value;
  out.v_norm = lp_norm(v, 2.0).value;
  finish(out);
  return out;
}

}  // namespace fraclab
