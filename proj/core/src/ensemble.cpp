#include "fraclab/ensemble.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/LU>

#include "fraclab/spectral.hpp"

namespace fraclab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
  return splitmix64(splitmix64(splitmix64(seed ^ splitmix64(a + 1)) ^ (b + 0x51ED27ull)) ^ (c + 0xA5A5ull));
}

Eigen::VectorXd bump_function(const Grid& g, std::uint64_t s, double amplitude) {
  std::mt19937_64 rng(s);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_real_distribution<double> centre(-0.5 * g.radius(), 0.5 * g.radius());
  std::uniform_real_distribution<double> width(0.5, 0.25 * g.radius());
  std::normal_distribution<double> amp(0.0, 1.0);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(g.n());
  const int nb = count(rng);
  for (int b = 0; b < nb; ++b) {
    const double c = centre(rng), w = width(rng), a = amp(rng);
    for (int i = 0; i < g.n(); ++i) {
      const double r = (g.point(i) - c) / w;
      if (std::abs(r) < 1.0) f[i] += a * std::exp(1.0 - 1.0 / (1.0 - r * r));
    }
  }
  return amplitude * f;
}

Eigen::VectorXd trig_function(const Grid& g, std::uint64_t s, double amplitude) {
  std::mt19937_64 rng(s);
  std::uniform_int_distribution<int> mode(1, std::min(16, g.n() / 4));
  std::normal_distribution<double> amp(0.0, 1.0);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(g.n());
  for (int t = 0; t < 3; ++t) {
    const double xi = g.xi_min() * mode(rng);
    const double a = amp(rng), b = amp(rng);
    for (int i = 0; i < g.n(); ++i) f[i] += a * std::cos(xi * g.point(i)) + b * std::sin(xi * g.point(i));
  }
  return amplitude * f;
}

Eigen::VectorXd draw(const EnsembleSpec& spec, const Grid& g, std::uint64_t s) {
  switch (spec.kind) {
    case EnsembleKind::smooth_random: return smooth_random_function(g, s, spec.delta, spec.amplitude);
    case EnsembleKind::bump: return bump_function(g, s, spec.amplitude);
    case EnsembleKind::trig: return trig_function(g, s, spec.amplitude);
  }
  return {};
}

}  // namespace

EnsembleKind parse_ensemble_kind(const std::string& s) {
  if (s == "smooth-random") return EnsembleKind::smooth_random;
  if (s == "bump") return EnsembleKind::bump;
  if (s == "trig") return EnsembleKind::trig;
  throw std::invalid_argument("unknown ensemble kind '" + s + "'");
}

const char* to_string(EnsembleKind k) {
  switch (k) {
    case EnsembleKind::smooth_random: return "smooth-random";
    case EnsembleKind::bump: return "bump";
    case EnsembleKind::trig: return "trig";
  }
  return "?";
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) { return stream(seed, 0x7121A1ull, trial); }

Eigen::VectorXd smooth_random_function(const Grid& g, std::uint64_t stream_seed, double delta, double amplitude) {
  if (!(delta > 0.0)) throw std::invalid_argument("smooth_random_function: delta must be positive");
  std::mt19937_64 rng(stream_seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SpectrumRep s{g, std::vector<std::complex<double>>(g.n(), 0.0)};
  for (int k = 1; k < g.n() / 2; ++k) {
    const double A = normal(rng), B = normal(rng);
    const double w = amplitude * std::pow(1.0 + k, -1.0 - 0.5 * delta);
    // cos(xi x) = Re[(-1)^k e^{i xi (x + R)}] on the grid
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const std::complex<double> c = 0.5 * w * sign * std::complex<double>(A, -B);
    s.coeffs[k] = c;
    s.coeffs[g.n() - k] = std::conj(c);
  }
  return from_spectrum(s);
}

EnsembleSample sample_trial(const EnsembleSpec& spec, const Grid& g, int trial) {
  if (spec.count < 1) throw std::invalid_argument("EnsembleSpec: count must be >= 1");
  if (!(spec.delta > 0.0)) throw std::invalid_argument("EnsembleSpec: delta must be positive");
  EnsembleSample out;
  out.trial = trial;
  out.seed = trial_seed(spec.seed, trial);
  const int m = spec.m;
  out.Q = MatrixField(g, m, spec.q_symmetry);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (spec.q_symmetry == Symmetry::symmetric && b < a) continue;
      if (spec.q_symmetry == Symmetry::antisymmetric && b <= a) continue;
      const Eigen::VectorXd e = draw(spec, g, stream(out.seed, 1, a, b));
      out.Q.set_entry(a, b, e);
      if (spec.q_symmetry == Symmetry::symmetric) out.Q.set_entry(b, a, e);
      if (spec.q_symmetry == Symmetry::antisymmetric) out.Q.set_entry(b, a, -e);
    }
  }
  out.v = VectorField(g, m);
  for (int a = 0; a < m; ++a) out.v.set_component(a, draw(spec, g, stream(out.seed, 2, a)));
  return out;
}

std::vector<EnsembleSample> sample_ensemble(const EnsembleSpec& spec, const Grid& g) {
  std::vector<EnsembleSample> out;
  out.reserve(spec.count);
  for (int t = 0; t < spec.count; ++t) out.push_back(sample_trial(spec, g, t));
  return out;
}

MatrixField random_antisymmetric_field(const Grid& g, int m, std::uint64_t seed, double delta) {
  MatrixField W(g, m, Symmetry::antisymmetric);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const Eigen::VectorXd e = smooth_random_function(g, stream(seed, 3, a, b), delta, 1.0);
      W.set_entry(a, b, e);
      W.set_entry(b, a, -e);
    }
  return W;
}

MatrixField random_orthogonal_field(const Grid& g, int m, std::uint64_t seed, double delta) {
  const MatrixField W = random_antisymmetric_field(g, m, seed, delta);
  MatrixField P(g, m, Symmetry::orthogonal);
  const RowMatrix I = RowMatrix::Identity(m, m);
  for (int i = 0; i < g.n(); ++i) {
    const RowMatrix A = W.block(i);
    // Cayley transform of an antisymmetric matrix is orthogonal
    P.block(i) = (I - A).partialPivLu().solve(I + A);
  }
  return P;
}

}  // namespace fraclab
