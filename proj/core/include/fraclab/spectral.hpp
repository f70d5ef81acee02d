#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "fraclab/grid.hpp"

namespace fraclab {

// Coefficients c_j, j in FFT order, with f(x_i) = sum_j c_j exp(i xi_j (x_i + R)).
struct SpectrumRep {
  Grid grid;
  std::vector<std::complex<double>> coeffs;
};

SpectrumRep to_spectrum(const Grid& g, const Eigen::VectorXd& f);
Eigen::VectorXd from_spectrum(const SpectrumRep& s);

// Applies symbol(j) to each mode j (FFT order) and returns the real part.
Eigen::VectorXd apply_multiplier(const Grid& g, const Eigen::VectorXd& f,
                                 const std::function<std::complex<double>(int)>& symbol);

// Same for a real symbol even in the frequency (symbol[j] = symbol[n-j]),
// given per FFT index; skips the complex round trip of the generic path.
Eigen::VectorXd apply_real_symbol(const Grid& g, const Eigen::VectorXd& f, const Eigen::VectorXd& symbol);

// Trigonometric interpolation onto a grid refined by an integer factor.
Eigen::VectorXd refine(const Grid& g, const Eigen::VectorXd& f, int factor);

}  // namespace fraclab
