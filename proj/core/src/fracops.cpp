#include "fraclab/fracops.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fraclab/conventions.hpp"
#include "fraclab/profiles.hpp"
#include "fraclab/spectral.hpp"

namespace fraclab {

Eigen::VectorXd fractional_symbol(const Grid& g, double s) {
  Eigen::VectorXd sym(g.n());
  for (int j = 0; j < g.n(); ++j) sym[j] = j == 0 ? 0.0 : std::pow(std::abs(g.xi(j)), s);
  return sym;
}

const char* to_string(Backend b) { return b == Backend::multiplier ? "multiplier" : "quadrature"; }

namespace {

Eigen::VectorXd frac_laplacian_quadrature(const Grid& g, const Eigen::VectorXd& f, double s) {
  const int n = g.n();
  const double dx = g.spacing();
  const Eigen::VectorXd k = even_power_profile(g, 1.0 + s);
  const Eigen::VectorXd f2 = second_derivative(g, f);
  // diagonal cell: (2f(x) - f(x+t) - f(x-t)) |t|^{-1-s} ~ -f'' |t|^{1-s}
  const double cell = riemann_zeta(s - 1.0) * std::pow(dx, 2.0 - s);
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 1; j < n; ++j) acc += (f[i] - f[(i + j) % n]) * k[j];
    out[i] = (acc * dx + cell * f2[i]) / c_sigma(s);
  }
  return out;
}

Eigen::VectorXd riesz_quadrature(const Grid& g, const Eigen::VectorXd& f) {
  const int n = g.n();
  const double dx = g.spacing();
  const Eigen::VectorXd h = hilbert_profile(g);
  const Eigen::VectorXd f1 = derivative(g, f);
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    // y = x + j dx, kernel 1/(pi (x - y)) at offset -j
    for (int j = 1; j < n; ++j) acc += (f[i] - f[(i + j) % n]) * h[n - j];
    // omitted cell: (f(x) - f(y)) / (pi (x - y)) -> f'(x) / pi
    out[i] = acc * dx + dx * f1[i] / std::numbers::pi;
  }
  return out;
}

}  // namespace

Eigen::VectorXd frac_laplacian(const Grid& g, const Eigen::VectorXd& f, double s, Backend b) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("frac_laplacian: s must lie in [0, 1]");
  if (f.size() != g.n()) throw std::invalid_argument("frac_laplacian: size mismatch");
  if (s == 0.0) return (f.array() - f.mean()).matrix();
  if (b == Backend::quadrature) return frac_laplacian_quadrature(g, f, s);
  return apply_real_symbol(g, f, fractional_symbol(g, s));
}

Eigen::VectorXd riesz(const Grid& g, const Eigen::VectorXd& f, Backend b) {
  if (f.size() != g.n()) throw std::invalid_argument("riesz: size mismatch");
  if (b == Backend::quadrature) return riesz_quadrature(g, f);
  const int n = g.n();
  return apply_multiplier(g, f, [&](int j) -> std::complex<double> {
    if (j == 0 || (riesz_zeroes_nyquist && j == n / 2)) return 0.0;
    const double sg = g.freq_index(j) > 0 ? 1.0 : -1.0;
    return std::complex<double>(0.0, riesz_sign * sg);
  });
}

VectorField frac_laplacian(const VectorField& f, double s, Backend b) {
  VectorField out(f.grid(), f.m());
  for (int a = 0; a < f.m(); ++a) out.set_component(a, frac_laplacian(f.grid(), f.component(a), s, b));
  return out;
}

VectorField riesz(const VectorField& f, Backend b) {
  VectorField out(f.grid(), f.m());
  for (int a = 0; a < f.m(); ++a) out.set_component(a, riesz(f.grid(), f.component(a), b));
  return out;
}

MatrixField frac_laplacian(const MatrixField& f, double s, Backend b) {
  MatrixField out(f.grid(), f.m(), f.tag() == Symmetry::orthogonal ? Symmetry::none : f.tag());
  for (int a = 0; a < f.m(); ++a)
    for (int c = 0; c < f.m(); ++c) out.set_entry(a, c, frac_laplacian(f.grid(), f.entry(a, c), s, b));
  return out;
}

MatrixField riesz(const MatrixField& f, Backend b) {
  MatrixField out(f.grid(), f.m(), f.tag() == Symmetry::orthogonal ? Symmetry::none : f.tag());
  for (int a = 0; a < f.m(); ++a)
    for (int c = 0; c < f.m(); ++c) out.set_entry(a, c, riesz(f.grid(), f.entry(a, c), b));
  return out;
}

double relative_l2(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double nb = b.norm();
  return nb > 0.0 ? (a - b).norm() / nb : (a - b).norm();
}

double relative_l2(const VectorField& a, const VectorField& b) { return relative_l2(a.data(), b.data()); }

}  // namespace fraclab
