#pragma once

namespace fraclab {

// g(b) = log((b - x) / (1 - b)) / (1 - x) - log((1 - b) / b) on 0 < b < 1/2
// for -1/2 < x < 0.
double root_equation(double x, double b);

struct RootResult {
  double b = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool bracketed = false;
};

// Bisection on (0, 1/2); bracketed is false when g has no sign change.
RootResult solve_root(double x);

}  // namespace fraclab
