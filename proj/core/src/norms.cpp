#include "fraclab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "fraclab/spectral.hpp"

namespace fraclab {

const char* to_string(NormMethod m) {
  switch (m) {
    case NormMethod::difference: return "difference";
    case NormMethod::dyadic: return "dyadic";
    case NormMethod::spectral: return "spectral";
    case NormMethod::rearrangement: return "rearrangement";
    case NormMethod::quadrature: return "quadrature";
  }
  return "?";
}

Eigen::VectorXd pointwise_magnitude(const VectorField& f) {
  Eigen::VectorXd mag(f.n());
  for (int i = 0; i < f.n(); ++i) mag[i] = f.data().segment(i * f.m(), f.m()).norm();
  return mag;
}

Eigen::VectorXd pointwise_magnitude(const MatrixField& f) {
  Eigen::VectorXd mag(f.n());
  for (int i = 0; i < f.n(); ++i) mag[i] = f.block(i).norm();
  return mag;
}

double lp_norm(const Grid& g, const Eigen::VectorXd& magnitude, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (std::isinf(p)) return magnitude.cwiseAbs().maxCoeff();
  double acc = 0.0;
  for (int i = 0; i < magnitude.size(); ++i) acc += std::pow(std::abs(magnitude[i]), p);
  return std::pow(acc * g.spacing(), 1.0 / p);
}

NormResult lp_norm(const VectorField& f, double p) {
  return {lp_norm(f.grid(), pointwise_magnitude(f), p), NormMethod::quadrature, 0.0};
}

double lorentz_norm(const Grid& g, const Eigen::VectorXd& magnitude, double p, double r) {
  if (!(p > 1.0)) throw std::invalid_argument("lorentz_norm: p must exceed 1");
  if (!(r >= 1.0)) throw std::invalid_argument("lorentz_norm: r must be >= 1");
  std::vector<double> f(magnitude.data(), magnitude.data() + magnitude.size());
  for (double& v : f) v = std::abs(v);
  std::sort(f.begin(), f.end(), std::greater<>());
  const double dx = g.spacing();
  if (std::isinf(r)) {
    double best = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) best = std::max(best, std::pow((k + 1) * dx, 1.0 / p) * f[k]);
    return best;
  }
  const double e = r / p;
  double acc = 0.0, prev = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double cur = std::pow((k + 1) * dx, e);
    acc += std::pow(f[k], r) * (cur - prev) / e;
    prev = cur;
  }
  return std::pow(acc, 1.0 / r);
}

NormResult lorentz_norm(const VectorField& f, double p, double r) {
  return {lorentz_norm(f.grid(), pointwise_magnitude(f), p, r), NormMethod::rearrangement, 0.0};
}

NormResult besov_difference(const VectorField& f, double s, double p, double q) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("besov_difference: s must lie in (0, 1)");
  if (!(q >= 1.0) || std::isinf(q)) throw std::invalid_argument("besov_difference: q must be finite and >= 1");
  const Grid& g = f.grid();
  const int n = g.n();
  double total = 0.0, outer = 0.0;
  for (int k = 1; k <= n / 2; ++k) {
    const double h = k * g.spacing();
    // +-h give equal norms by translation invariance; +-n/2 is one offset
    const double mult = (k == n / 2) ? 1.0 : 2.0;
    const VectorField d = shift(f, k) - f;
    const double term = mult * g.spacing() * std::pow(h, -1.0 - s * q) * std::pow(lp_norm(d, p).value, q);
    total += term;
    if (2 * k > n / 2) outer += term;
  }
  return {std::pow(total, 1.0 / q), NormMethod::difference, total > 0.0 ? outer / total : 0.0};
}

namespace {
void require_mean_zero(const VectorField& f, const char* what) {
  const Eigen::VectorXd mean = integrate(f) / f.grid().length();
  const double scale = std::max(f.data().cwiseAbs().maxCoeff(), 1e-300);
  if (mean.cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::domain_error(std::string(what) + ": field must have zero mean");
}
}  // namespace

NormResult sobolev_spectral(const VectorField& f, double s) {
  if (s < 0.0) require_mean_zero(f, "sobolev_spectral");
  const Grid& g = f.grid();
  double acc = 0.0;
  for (int a = 0; a < f.m(); ++a) {
    const SpectrumRep sp = to_spectrum(g, f.component(a));
    for (int j = 1; j < g.n(); ++j) acc += std::pow(std::abs(g.xi(j)), 2.0 * s) * std::norm(sp.coeffs[j]);
  }
  return {std::sqrt(acc * g.length()), NormMethod::spectral, 0.0};
}

int octave_count(const Grid& g) {
  int c = 0;
  while ((1 << c) <= g.n() / 2) ++c;
  return c;
}

VectorField dyadic_block(const VectorField& f, int j) {
  const Grid& g = f.grid();
  const int lo = 1 << j, hi = 1 << (j + 1);
  VectorField out(g, f.m());
  for (int a = 0; a < f.m(); ++a) {
    out.set_component(a, apply_multiplier(g, f.component(a), [&](int idx) -> std::complex<double> {
      const int k = std::abs(g.freq_index(idx));
      return (k >= lo && k < hi) ? 1.0 : 0.0;
    }));
  }
  return out;
}

NormResult dyadic_besov(const VectorField& f, double s, double p, double q, std::optional<double> r) {
  if (!(q >= 1.0) || std::isinf(q)) throw std::invalid_argument("dyadic_besov: q must be finite and >= 1");
  require_mean_zero(f, "dyadic_besov");
  const Grid& g = f.grid();
  const int J = octave_count(g);
  double total = 0.0, last = 0.0;
  for (int j = 0; j < J; ++j) {
    const VectorField b = dyadic_block(f, j);
    const Eigen::VectorXd mag = pointwise_magnitude(b);
    const double bn = r ? lorentz_norm(g, mag, p, *r) : lp_norm(g, mag, p);
    const double term = std::pow(std::pow((1 << j) * g.xi_min(), s) * bn, q);
    total += term;
    if (j == J - 1) last = term;
  }
  return {std::pow(total, 1.0 / q), NormMethod::dyadic, total > 0.0 ? last / total : 0.0};
}

}  // namespace fraclab
