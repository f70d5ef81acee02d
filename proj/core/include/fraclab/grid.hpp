#pragma once

#include <Eigen/Core>

namespace fraclab {

// Uniform grid on the periodic window [-R, R).
class Grid {
public:
  Grid() = default;

  double radius() const { return radius_; }
  int n() const { return n_; }
  double spacing() const { return spacing_; }
  double point(int i) const { return -radius_ + spacing_ * i; }
  double weight(int) const { return spacing_; }
  double length() const { return 2.0 * radius_; }

  Eigen::VectorXd points() const;
  Eigen::VectorXd weights() const;

  // Signed frequency index in FFT order, k in {-n/2, ..., n/2-1}.
  int freq_index(int j) const { return j < n_ / 2 ? j : j - n_; }
  double xi(int j) const;
  double xi_min() const;

  // Cyclic offset distance in cells, in [0, n/2].
  int cyclic_distance(int i, int j) const;

  bool operator==(const Grid& o) const { return n_ == o.n_ && radius_ == o.radius_; }
  bool operator!=(const Grid& o) const { return !(*this == o); }

private:
  friend Grid make_grid(double radius, int n);
  double radius_ = 0.0;
  int n_ = 0;
  double spacing_ = 0.0;
};

// Throws std::invalid_argument unless n >= 8 is a power of two and radius > 0.
Grid make_grid(double radius, int n);

}  // namespace fraclab
