#include "fraclab/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fraclab {

Grid make_grid(double radius, int n) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("make_grid: radius must be positive, got " + std::to_string(radius));
  if (n < 8 || (n & (n - 1)) != 0)
    throw std::invalid_argument("make_grid: n must be a power of two >= 8, got " + std::to_string(n));
  Grid g;
  g.radius_ = radius;
  g.n_ = n;
  g.spacing_ = 2.0 * radius / n;
  return g;
}

Eigen::VectorXd Grid::points() const {
  Eigen::VectorXd x(n_);
  for (int i = 0; i < n_; ++i) x[i] = point(i);
  return x;
}

Eigen::VectorXd Grid::weights() const { return Eigen::VectorXd::Constant(n_, spacing_); }

double Grid::xi(int j) const { return std::numbers::pi * freq_index(j) / radius_; }

double Grid::xi_min() const { return std::numbers::pi / radius_; }

int Grid::cyclic_distance(int i, int j) const {
  int d = std::abs(i - j) % n_;
  return d > n_ / 2 ? n_ - d : d;
}

}  // namespace fraclab
