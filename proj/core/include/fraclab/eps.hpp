#pragma once

#include <Eigen/Core>

#include "fraclab/kernel.hpp"

namespace fraclab {

struct EpsSystem {
  Kernel K;          // anti-self-dual
  MatrixField Omega; // pointwise in so(m)
  MatrixField omega; // Omega + int K(x,y)^T dy
  double sigma = 0.25;
  double eps = 0.0;
};

// Validates the invariants and fills omega.
EpsSystem make_eps_system(Kernel K, MatrixField Omega, double sigma, double eps);

// Matrix of v -> D v - T_K(v) - Omega v on all of R^{nm}, D = (-Delta)^{1/4}.
Eigen::MatrixXd assemble_eps_operator(const EpsSystem& sys);

// Orthonormal basis (columns) of the fields with zero mean in each component.
Eigen::MatrixXd mean_zero_basis(int n, int m);

// Smallest singular value of the operator restricted to mean-zero inputs.
double eps_sigma_min(const EpsSystem& sys);

// Norm budget |(-Delta)^{sigma/2} K|_{A^{-sigma}_{2,2}} + |Omega|_{L^2}.
double eps_budget(const Kernel& K, const MatrixField& Omega, double sigma);

}  // namespace fraclab
