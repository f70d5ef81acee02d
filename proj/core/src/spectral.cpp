#include "fraclab/spectral.hpp"

#include <stdexcept>

#include <unsupported/Eigen/FFT>

namespace fraclab {

namespace {
Eigen::FFT<double>& engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}
}  // namespace

SpectrumRep to_spectrum(const Grid& g, const Eigen::VectorXd& f) {
  if (f.size() != g.n()) throw std::invalid_argument("to_spectrum: size mismatch");
  std::vector<std::complex<double>> in(f.data(), f.data() + f.size()), out;
  engine().fwd(out, in);
  const double inv_n = 1.0 / g.n();
  for (auto& c : out) c *= inv_n;
  return {g, std::move(out)};
}

Eigen::VectorXd from_spectrum(const SpectrumRep& s) {
  const int n = s.grid.n();
  std::vector<std::complex<double>> in = s.coeffs, out;
  for (auto& c : in) c *= static_cast<double>(n);
  engine().inv(out, in);
  Eigen::VectorXd f(n);
  for (int i = 0; i < n; ++i) f[i] = out[i].real();
  return f;
}

Eigen::VectorXd apply_multiplier(const Grid& g, const Eigen::VectorXd& f,
                                 const std::function<std::complex<double>(int)>& symbol) {
  SpectrumRep s = to_spectrum(g, f);
  for (int j = 0; j < g.n(); ++j) s.coeffs[j] *= symbol(j);
  return from_spectrum(s);
}

Eigen::VectorXd apply_real_symbol(const Grid& g, const Eigen::VectorXd& f, const Eigen::VectorXd& symbol) {
  const int n = g.n();
  if (f.size() != n || symbol.size() != n) throw std::invalid_argument("apply_real_symbol: size mismatch");
  thread_local std::vector<double> real;
  thread_local std::vector<std::complex<double>> spec;
  real.assign(f.data(), f.data() + n);
  engine().fwd(spec, real);
  for (int j = 0; j < n; ++j) spec[j] *= symbol[j];
  engine().inv(real, spec);
  return Eigen::Map<const Eigen::VectorXd>(real.data(), n);
}

Eigen::VectorXd refine(const Grid& g, const Eigen::VectorXd& f, int factor) {
  const int n = g.n(), nf = n * factor;
  const SpectrumRep s = to_spectrum(g, f);
  SpectrumRep fine{make_grid(g.radius(), nf), std::vector<std::complex<double>>(nf, 0.0)};
  for (int j = 0; j < n / 2; ++j) fine.coeffs[j] = s.coeffs[j];
  for (int j = n / 2 + 1; j < n; ++j) fine.coeffs[nf - n + j] = s.coeffs[j];
  // split the Nyquist coefficient between +-n/2 to keep the result real
  fine.coeffs[n / 2] = 0.5 * s.coeffs[n / 2];
  fine.coeffs[nf - n / 2] = 0.5 * s.coeffs[n / 2];
  return from_spectrum(fine);
}

}  // namespace fraclab
