#pragma once

#include <Eigen/Core>

#include "fraclab/fields.hpp"

namespace fraclab {

enum class Backend { multiplier, quadrature };

const char* to_string(Backend b);

// |xi_j|^s per FFT index, zero mode 0.
Eigen::VectorXd fractional_symbol(const Grid& g, double s);

// (-Delta)^{s/2} with symbol |xi|^s. The quadrature backend sums the
// periodized PV difference integral over symmetric pairs with the diagonal
// cell omitted plus its leading generalized Euler-Maclaurin correction, then
// divides by c_s. s = 0 is f minus its mean in both backends.
Eigen::VectorXd frac_laplacian(const Grid& g, const Eigen::VectorXd& f, double s,
                               Backend b = Backend::multiplier);
VectorField frac_laplacian(const VectorField& f, double s, Backend b = Backend::multiplier);
MatrixField frac_laplacian(const MatrixField& f, double s, Backend b = Backend::multiplier);

// Riesz transform, symbol i sgn(xi). The quadrature backend uses the periodic
// 1/(pi t) kernel, symmetric omission and the omitted-cell term dx f'(x)/pi.
Eigen::VectorXd riesz(const Grid& g, const Eigen::VectorXd& f, Backend b = Backend::multiplier);
VectorField riesz(const VectorField& f, Backend b = Backend::multiplier);
MatrixField riesz(const MatrixField& f, Backend b = Backend::multiplier);

// Relative L^2 discrepancy |a - b| / |b|.
double relative_l2(const Eigen::VectorXd& a, const Eigen::VectorXd& b);
double relative_l2(const VectorField& a, const VectorField& b);

}  // namespace fraclab
