#include "fraclab/conventions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace fraclab {

double c_sigma(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("c_sigma: s must lie in (0, 1]");
  if (s == 1.0) return std::numbers::pi;
  return 2.0 * std::tgamma(1.0 - s) * std::cos(0.5 * std::numbers::pi * s) / s;
}

std::string conventions_json() {
  nlohmann::ordered_json j;
  j["riesz_symbol"] = riesz_sign > 0 ? "+i sgn(xi)" : "-i sgn(xi)";
  j["riesz_formula"] = "(1/pi) PV int (v(x)-v(y))/(x-y) dy";
  j["frac_laplacian_symbol"] = "|xi|^s, zero mode annihilated";
  j["kernel_normalization"] = "kernels unnormalized, PV difference integral = c_s |xi|^s";
  j["c_half"] = c_sigma(0.5);
  j["riesz_nyquist"] = riesz_zeroes_nyquist ? "zeroed" : "kept";
  j["window"] = "periodic [-R, R), singular kernels periodized over images";
  j["version"] = kVersion;
  return j.dump();
}

}  // namespace fraclab
