#include "fraclab/roots.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include <boost/math/tools/roots.hpp>

namespace fraclab {

double root_equation(double x, double b) {
  return std::log((b - x) / (1.0 - b)) / (1.0 - x) - std::log((1.0 - b) / b);
}

RootResult solve_root(double x) {
  if (!(x > -0.5 && x < 0.0)) throw std::invalid_argument("solve_root: x must lie in (-1/2, 0)");
  const double lo = std::numeric_limits<double>::min(), hi = 0.5;
  const auto g = [x](double b) { return root_equation(x, b); };
  RootResult res;
  if (g(lo) * g(hi) > 0.0) return res;
  res.bracketed = true;
  std::uintmax_t iters = 2000;
  // stop once the bracket is a few ulps wide
  const auto [a, b] = boost::math::tools::bisect(g, lo, hi, boost::math::tools::eps_tolerance<double>(50), iters);
  res.b = std::abs(g(a)) <= std::abs(g(b)) ? a : b;
  res.residual = std::abs(g(res.b));
  res.iterations = static_cast<int>(iters);
  return res;
}

}  // namespace fraclab
