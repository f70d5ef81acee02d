#include "fraclab/profiles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

namespace fraclab {

double hurwitz_zeta(double s, double a) {
  gsl_sf_result r;
  const int status = gsl_sf_hzeta_e(s, a, &r);
  if (status != GSL_SUCCESS)
    throw std::domain_error("hurwitz_zeta(" + std::to_string(s) + ", " + std::to_string(a) + "): " + gsl_strerror(status));
  return r.val;
}

double riemann_zeta(double s) {
  gsl_sf_result r;
  const int status = gsl_sf_zeta_e(s, &r);
  if (status != GSL_SUCCESS) throw std::domain_error("riemann_zeta(" + std::to_string(s) + "): " + gsl_strerror(status));
  return r.val;
}

namespace {
double folded_offset(const Grid& g, int j) { return (j <= g.n() / 2 ? j : j - g.n()) * g.spacing(); }
}  // namespace

Eigen::VectorXd even_power_profile(const Grid& g, double s, Geometry geo) {
  if (!(s > 1.0)) throw std::invalid_argument("even_power_profile: s must exceed 1");
  const int n = g.n();
  Eigen::VectorXd k = Eigen::VectorXd::Zero(n);
  const double scale = std::pow(g.length(), -s);
  for (int j = 1; j < n; ++j) {
    if (geo == Geometry::line) {
      k[j] = std::pow(std::abs(folded_offset(g, j)), -s);
    } else {
      const double tau = static_cast<double>(j) / n;
      k[j] = scale * (hurwitz_zeta(s, tau) + hurwitz_zeta(s, 1.0 - tau));
    }
  }
  return k;
}

Eigen::VectorXd odd_power_profile(const Grid& g, double s, Geometry geo) {
  if (!(s > 1.0)) throw std::invalid_argument("odd_power_profile: s must exceed 1");
  const int n = g.n();
  Eigen::VectorXd k = Eigen::VectorXd::Zero(n);
  const double scale = std::pow(g.length(), -s);
  for (int j = 1; j < n; ++j) {
    if (j == n / 2) continue;  // odd about t = R as well
    if (geo == Geometry::line) {
      const double t = folded_offset(g, j);
      k[j] = std::copysign(std::pow(std::abs(t), -s), t);
    } else {
      const double tau = static_cast<double>(j) / n;
      k[j] = scale * (hurwitz_zeta(s, tau) - hurwitz_zeta(s, 1.0 - tau));
    }
  }
  return k;
}

Eigen::VectorXd hilbert_profile(const Grid& g, Geometry geo) {
  const int n = g.n();
  Eigen::VectorXd h = Eigen::VectorXd::Zero(n);
  for (int j = 1; j < n; ++j) {
    if (j == n / 2) continue;
    if (geo == Geometry::line)
      h[j] = 1.0 / (std::numbers::pi * folded_offset(g, j));
    else
      h[j] = 1.0 / (g.length() * std::tan(std::numbers::pi * j / n));
  }
  return h;
}

}  // namespace fraclab
