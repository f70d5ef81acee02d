#include "fraclab/kernel_norms.hpp"

#include <cmath>
#include <stdexcept>

namespace fraclab {

void validate(const KernelNormParams& params) {
  if (!(params.p > 1.0) || std::isinf(params.p)) throw std::invalid_argument("kernel norm: p must lie in (1, inf)");
  if (!(params.q >= 1.0) || std::isinf(params.q)) throw std::invalid_argument("kernel norm: q must lie in [1, inf)");
  if (params.r && !(*params.r >= 1.0)) throw std::invalid_argument("kernel norm: r must be >= 1");
  if (!std::isfinite(params.s)) throw std::invalid_argument("kernel norm: s must be finite");
}

NormResult kernel_besov_norm(const Kernel& K, const KernelNormParams& params, Diagonal which) {
  validate(params);
  const Grid& g = K.grid();
  const int n = g.n();
  const double dx = g.spacing();
  Eigen::VectorXd mag(n);
  double total = 0.0, outer = 0.0;
  for (int k = -n / 2 + 1; k <= n / 2; ++k) {
    if (k == 0) continue;
    for (int i = 0; i < n; ++i) {
      const int j = ((i + k) % n + n) % n;
      mag[i] = which == Diagonal::second_slot ? K.block(i, j).norm() : K.block(j, i).norm();
    }
    const double inner = params.r ? lorentz_norm(g, mag, params.p, *params.r) : lp_norm(g, mag, params.p);
    // k = n/2 stands for both h = +-R, each weighted 1/2
    const double h = std::abs(k) * dx;
    const double term = dx * std::pow(h, 1.0 - params.q * params.s) * std::pow(inner, params.q);
    total += term;
    if (4 * std::abs(k) > n) outer += term;
  }
  return {std::pow(total, 1.0 / params.q), NormMethod::quadrature, total > 0.0 ? outer / total : 0.0};
}

}  // namespace fraclab
