#pragma once

#include <string>

namespace fraclab {

inline constexpr const char* kVersion = "0.3.0";

// Multiplier of the Riesz transform is riesz_sign * i * sgn(xi). Fixed by
// comparing the multiplier against the principal-value formula
//   R v(x) = (1/pi) PV int (v(x) - v(y)) / (x - y) dy.
inline constexpr int riesz_sign = +1;

// PV int (f(x) - f(y)) / |x - y|^{1+s} dy has symbol c_s |xi|^s with
//   c_s = 2 Gamma(1 - s) cos(pi s / 2) / s,  c_1 = pi.
// Operators in this library use the normalized symbol |xi|^s; kernels keep
// the unnormalized formulas, so kernel routes carry c_s explicitly.
double c_sigma(double s);

// Homogeneous multipliers annihilate the zero mode. The Riesz symbol is set
// to zero on the Nyquist mode (no real-valued odd extension exists there);
// |xi|^s keeps it.
inline constexpr bool riesz_zeroes_nyquist = true;

// JSON object describing the above, embedded in every report.
std::string conventions_json();

}  // namespace fraclab
