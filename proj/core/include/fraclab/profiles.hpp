#pragma once

#include <Eigen/Core>

#include "fraclab/grid.hpp"

namespace fraclab {

enum class Geometry { periodic, line };

// Hurwitz zeta for s > 1, a > 0, and the Riemann zeta for s != 1.
double hurwitz_zeta(double s, double a);
double riemann_zeta(double s);

// Profiles sampled at offsets t_j = j * dx, j = 0..n-1; entry 0 is set to 0.
// Periodic geometry sums all images t + 2Rm (Hurwitz zeta closed form); line
// geometry uses the cyclic offset folded into [-R, R) without images.
//   even_power:  |t|^{-s}                    (s > 1)
//   odd_power:   sgn(t) |t|^{-s}             (s > 1)
//   hilbert:     1/(pi t); periodic form cot(pi t / 2R) / 2R, zero at t = R
Eigen::VectorXd even_power_profile(const Grid& g, double s, Geometry geo = Geometry::periodic);
Eigen::VectorXd odd_power_profile(const Grid& g, double s, Geometry geo = Geometry::periodic);
Eigen::VectorXd hilbert_profile(const Grid& g, Geometry geo = Geometry::periodic);

// Offset index of (x_i - y_j) in a profile.
inline int offset(int i, int j, int n) { return ((i - j) % n + n) % n; }

}  // namespace fraclab
