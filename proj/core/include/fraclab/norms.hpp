#pragma once

#include <limits>
#include <optional>

#include "fraclab/fields.hpp"

namespace fraclab {

enum class NormMethod { difference, dyadic, spectral, rearrangement, quadrature };

const char* to_string(NormMethod m);

struct NormResult {
  double value = 0.0;
  NormMethod method = NormMethod::quadrature;
  // Share of value^q carried by the outermost octave of the outer sum.
  double truncation = 0.0;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Pointwise magnitude: |v(x)| Euclidean for vectors, Frobenius for matrices.
Eigen::VectorXd pointwise_magnitude(const VectorField& f);
Eigen::VectorXd pointwise_magnitude(const MatrixField& f);

// (sum_i dx |f_i|^p)^{1/p}; p = kInf gives the max.
double lp_norm(const Grid& g, const Eigen::VectorXd& magnitude, double p);
NormResult lp_norm(const VectorField& f, double p);

// Lorentz L^{p,r} on the decreasing rearrangement of a step function with
// cell measures dx. r = kInf is sup_t t^{1/p} f*(t); finite r integrates
// (t^{1/p} f*(t))^r dt / t exactly on each step. Requires p > 1.
double lorentz_norm(const Grid& g, const Eigen::VectorXd& magnitude, double p, double r);
NormResult lorentz_norm(const VectorField& f, double p, double r);

// (int |h|^{-1-sq} |f(.+h) - f|_{L^p}^q dh)^{1/q} over offsets h = k dx,
// 0 < |k| <= n/2, the two k = +-n/2 terms weighted 1/2. Requires 0 < s < 1.
NormResult besov_difference(const VectorField& f, double s, double p, double q);

// (sum_{xi != 0} |xi|^{2s} |f^(xi)|^2 2R)^{1/2}, f^ = FFT / n. Requires a
// mean-zero field when s < 0 (relative tolerance 1e-10 on the mean).
NormResult sobolev_spectral(const VectorField& f, double s);

// Octave j collects |xi| in [2^j xi_min, 2^{j+1} xi_min); the block is weighted
// by (2^j xi_min)^{s}. Block L^p norms, or L^{p,r} when r is given.
NormResult dyadic_besov(const VectorField& f, double s, double p, double q,
                        std::optional<double> r = std::nullopt);

// Dyadic block j of f (sharp frequency cut), for tests and diagnostics.
VectorField dyadic_block(const VectorField& f, int j);
int octave_count(const Grid& g);

}  // namespace fraclab
