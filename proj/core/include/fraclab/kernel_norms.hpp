#pragma once

#include <optional>

#include "fraclab/kernel.hpp"
#include "fraclab/norms.hpp"

namespace fraclab {

struct KernelNormParams {
  double s = 0.0;
  double p = 2.0;
  double q = 2.0;
  std::optional<double> r;  // Lorentz secondary exponent
};

// Throws std::invalid_argument on exponents outside 1 < p < inf, 1 <= q < inf, r >= 1.
void validate(const KernelNormParams& params);

enum class Diagonal { second_slot, first_slot };

// (sum_h dx |h|^{1-qs} |K(., .+h)|^q_{L^p})^{1/q}, h = k dx with 0 < |k| <= n/2
// (k = +-n/2 each weighted 1/2), inner norm of x -> |K(x, x+h)|_F. With
// first_slot the inner function is x -> |K(x+h, x)|_F.
NormResult kernel_besov_norm(const Kernel& K, const KernelNormParams& params,
                             Diagonal which = Diagonal::second_slot);

}  // namespace fraclab
