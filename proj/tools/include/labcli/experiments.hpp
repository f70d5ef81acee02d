#pragma once

#include <string>
#include <vector>

#include "fraclab/fields.hpp"
#include "labcli/config.hpp"
#include "labcli/frozen.hpp"
#include "labcli/report.hpp"

namespace labcli {

// Residual of one identity along the refinement schedule. The tolerance
// applies from gate_n upwards; min_order, when positive, is a floor on the
// least-squares slope of log residual against log spacing.
struct Series {
  std::string name;
  std::vector<int> n;
  std::vector<double> residual;
  double tolerance = 0.0;
  int gate_n = 0;
  double min_order = 0.0;
  // e(2n) <= halving * e(n) between consecutive refinements, when positive.
  double halving = 0.0;
  double order = 0.0;
  bool pass = false;
};

// Groups: backend, exact, kernel, or all (config.estimate).
std::vector<Series> identity_series(const Config& c, int threads);
Outcome run_identities(const Config& c, int threads);

// Estimates: firstope, ablation, compensation, intro-a, sq, vpq, estl21, adjoint.
Outcome run_ratios(const Config& c, int threads, const Frozen& frozen);

// config.estimate holds the comma-separated list of smallness levels.
Outcome run_eps(const Config& c, int threads);

// config.count sample points x in [-0.49, -0.01].
Outcome run_roots(const Config& c, const Frozen& frozen);

// Dumps the kernels of one seeded Q into dir with their norms.
Outcome run_kernels(const Config& c, const std::string& dir);

// Pinned settings shared by the checked-in configs, calibration and the
// acceptance suite: identities, firstope, ablation, compensation, intro-a, sq,
// vpq, estl21, adjoint, eps, roots, kernels.
Config standard_config(const std::string& name);

// Norm-equivalence ratios over a random ensemble at each refinement:
// difference vs spectral (s = 1/2) and dyadic vs spectral (s = +-1/2), p = q = 2.
struct NormBrackets {
  std::vector<int> n;
  std::vector<double> diff_lo, diff_hi, dyadic_lo, dyadic_hi;
};
NormBrackets measure_norm_brackets(const Config& c, int threads);

// Measures every frozen constant; the outcome lists the measured values.
Frozen run_calibration(const Config& c, int threads, Outcome& summary);

// Shared helpers.
double empirical_order(const std::vector<int>& n, const std::vector<double>& e, double radius);
Eigen::VectorXd band_limit(const fraclab::Grid& g, const Eigen::VectorXd& f, int kmax);
std::vector<double> parse_list(const std::string& s, const std::string& key);

}  // namespace labcli
