#include "fraclab/kernels.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fraclab/conventions.hpp"
#include "fraclab/fracops.hpp"
#include "fraclab/spectral.hpp"

namespace fraclab {

namespace {

// Toeplitz-circulant matrix C(i, j) = profile[(i - j) mod n].
RowMatrix circulant(const Eigen::VectorXd& profile) {
  const int n = static_cast<int>(profile.size());
  RowMatrix C(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) C(i, j) = profile[offset(i, j, n)];
  return C;
}

Kernel difference_kernel(const MatrixField& Q, const Eigen::VectorXd& profile, const std::string& label) {
  const Grid& g = Q.grid();
  const int n = g.n(), m = Q.m();
  Kernel K(g, m, DiagonalPolicy::singular, 1.5, label);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      K.block(i, j) = (Q.block(i) - Q.block(j)) * profile[offset(i, j, n)];
    }
  K.detect_tag();
  return K;
}

}  // namespace

Kernel kernel_dhalf(const MatrixField& Q, Geometry geo) {
  return difference_kernel(Q, even_power_profile(Q.grid(), 1.5, geo), "K_dhalf");
}

Kernel kernel_dhalf_self_dual(const MatrixField& Q, Geometry geo) {
  const int n = Q.n();
  Eigen::VectorXd k = even_power_profile(Q.grid(), 1.5, geo);
  // sgn of the cyclic offset; the offset n/2 has no sign and is dropped
  for (int j = 1; j < n; ++j) k[j] *= (j < n / 2) ? 1.0 : (j > n / 2 ? -1.0 : 0.0);
  return difference_kernel(Q, k, "K_dhalf_self_dual");
}

Kernel kernel_RQ(const MatrixField& Q) {
  const Grid& g = Q.grid();
  const int n = g.n(), m = Q.m();
  const double dx = g.spacing();
  const Eigen::VectorXd h = hilbert_profile(g);
  const RowMatrix Hm = circulant(h);

  // S1(d), S2(d): sums of H(x-z) H(z-y) over z nearer to x (resp. y), y = x + d
  Eigen::VectorXd S1 = Eigen::VectorXd::Zero(n), S2 = Eigen::VectorXd::Zero(n);
  for (int d = 1; d < n; ++d) {
    for (int e = 1; e < n; ++e) {
      if (e == d) continue;
      const double hh = h[(n - e) % n] * h[((e - d) % n + n) % n];
      const int dxz = g.cyclic_distance(e, 0), dyz = g.cyclic_distance(e, d);
      const double w = dxz < dyz ? 1.0 : (dxz == dyz ? 0.5 : 0.0);
      S1[d] += w * hh;
      S2[d] += (1.0 - w) * hh;
    }
  }

  const MatrixField dQ = derivative(Q);
  Kernel K(g, m, DiagonalPolicy::singular, 1.0, "R_Q");
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const Eigen::VectorXd q = Q.entry(a, b), q1 = dQ.entry(a, b);
      const RowMatrix HQH = Hm * q.asDiagonal() * Hm;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          const int d = offset(j, i, n);
          const double hxy = h[offset(i, j, n)];
          double v = dx * (HQH(i, j) - q[i] * S1[d] - q[j] * S2[d]);
          v += dx * (q1[j] - q1[i]) / std::numbers::pi * hxy;
          v += (q[i] + q[j]) / (2.0 * g.length());
          K(i * m + a, j * m + b) = v;
        }
      }
    }
  }
  K.detect_tag(1e-9);
  return K;
}

Kernel kernel_TRQ(const MatrixField& Q) {
  const Grid& g = Q.grid();
  const int n = g.n(), m = Q.m();
  const double dx = g.spacing();
  const Eigen::VectorXd h = hilbert_profile(g);
  const Eigen::VectorXd k = even_power_profile(g, 1.5);
  const Eigen::VectorXd kp = -1.5 * odd_power_profile(g, 2.5);
  const RowMatrix Hm = circulant(h);
  const double c = c_sigma(0.5);
  const MatrixField DQ = frac_laplacian(Q, 0.5);
  const MatrixField dQ = derivative(Q);

  Kernel K(g, m, DiagonalPolicy::finite, 1.0, "K_TRQ");
  RowMatrix G(n, n), part(n, n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const Eigen::VectorXd q = Q.entry(a, b), q1 = dQ.entry(a, b);
      const Eigen::VectorXd dq = c * DQ.entry(a, b);
      // G(z, y) = (Q(y) - Q(z)) |z - y|^{-3/2}
      for (int z = 0; z < n; ++z)
        for (int y = 0; y < n; ++y) G(z, y) = z == y ? 0.0 : (q[y] - q[z]) * k[offset(z, y, n)];
      part.noalias() = -dx * (Hm * G);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          const int o = offset(x, y, n);
          double v = part(x, y) + Hm(x, y) * dq[y];
          if (x != y) {
            // omitted cell z = x of the Riesz sum: dx g_y'(x) / pi
            const double gp = -q1[x] * k[o] + (q[y] - q[x]) * kp[o];
            v += dx * gp / std::numbers::pi;
          }
          K(x * m + a, y * m + b) = v;
        }
      }
    }
  }
  K.detect_tag();
  return K;
}

Kernel antisymmetrize(const Kernel& K) {
  Kernel S(K.grid(), K.m(), DiagonalPolicy::singular, K.gamma(), "S(" + K.label() + ")");
  S.matrix() = K.matrix() - K.matrix().transpose();
  S.set_diagonal(DiagonalPolicy::singular);
  S.set_tag_unchecked(KernelTag::anti_self_dual);
  return S;
}

Kernel antisymmetrize_SQ(const MatrixField& Q) {
  Kernel S = antisymmetrize(kernel_TRQ(Q));
  S.set_label("S_Q");
  return S;
}

Kernel adjoint_multiply(const MatrixField& P, const Kernel& K) {
  if (P.grid() != K.grid() || P.m() != K.m()) throw std::invalid_argument("adjoint_multiply: dimension mismatch");
  const int n = K.n(), m = K.m();
  Kernel G(K.grid(), m, K.diagonal(), K.gamma(), "P" + K.label() + "P^T");
  // block rows by P(x), then block columns by P(y)^T
  RowMatrix left(n * m, n * m);
  for (int i = 0; i < n; ++i) left.middleRows(i * m, m).noalias() = P.block(i) * K.matrix().middleRows(i * m, m);
  const Eigen::VectorXd& Pd = P.data();
  RowMatrix& out = G.matrix();
  for (int r = 0; r < n * m; ++r)
    for (int j = 0; j < n; ++j)
      for (int b = 0; b < m; ++b) {
        double t = 0.0;
        for (int d = 0; d < m; ++d) t += left(r, j * m + d) * Pd[(j * m + b) * m + d];
        out(r, j * m + b) = t;
      }
  if (K.diagonal() == DiagonalPolicy::singular) G.set_diagonal(DiagonalPolicy::singular);
  if (K.tag() == KernelTag::anti_self_dual) {
    G.set_tag_unchecked(KernelTag::anti_self_dual);
    G.check_tag();
  }
  return G;
}

Kernel kernel_frac_lap_first_slot(const Kernel& K, double s) {
  if (!(s > 0.0 && s < 0.5)) throw std::invalid_argument("kernel_frac_lap_first_slot: s must lie in (0, 1/2)");
  const Grid& g = K.grid();
  const int n = g.n(), m = K.m(), N = n * m;
  Kernel out(g, m, DiagonalPolicy::finite, K.gamma() + s, "D^s " + K.label());
  const Eigen::VectorXd sym = fractional_symbol(g, s);
  // rows of the transpose are the column functions, contiguous up to stride m
  RowMatrix T = K.matrix().transpose();
  Eigen::VectorXd col(n);
  for (int cidx = 0; cidx < N; ++cidx)
    for (int a = 0; a < m; ++a) {
      for (int i = 0; i < n; ++i) col[i] = T(cidx, i * m + a);
      const Eigen::VectorXd r = apply_real_symbol(g, col, sym);
      for (int i = 0; i < n; ++i) T(cidx, i * m + a) = r[i];
    }
  out.matrix() = T.transpose();
  return out;
}

Kernel random_anti_self_dual_kernel(const Grid& g, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const int N = g.n() * m;
  RowMatrix A(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) A(i, j) = normal(rng);
  Kernel K(g, m, DiagonalPolicy::finite, 0.0, "random_asd");
  K.matrix() = A - A.transpose();
  K.set_tag_unchecked(KernelTag::anti_self_dual);
  return K;
}

}  // namespace fraclab
