#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fraclab/fields.hpp"

namespace fraclab {

enum class EnsembleKind { smooth_random, bump, trig };

EnsembleKind parse_ensemble_kind(const std::string& s);
const char* to_string(EnsembleKind k);

struct EnsembleSpec {
  std::uint64_t seed = 1;
  int count = 1;
  int m = 1;
  double delta = 1.0;
  double amplitude = 1.0;
  EnsembleKind kind = EnsembleKind::smooth_random;
  Symmetry q_symmetry = Symmetry::symmetric;
};

struct EnsembleSample {
  int trial = 0;
  std::uint64_t seed = 0;
  MatrixField Q;
  VectorField v;
};

// Seed of trial t, a pure function of (seed, t).
std::uint64_t trial_seed(std::uint64_t seed, int trial);

// Draws one trial. Smooth-random modes are drawn in increasing |k| from
// per-entry streams, so a trial shares its low modes across refinements.
EnsembleSample sample_trial(const EnsembleSpec& spec, const Grid& g, int trial);

std::vector<EnsembleSample> sample_ensemble(const EnsembleSpec& spec, const Grid& g);

// Single scalar draw of the smooth-random kind.
Eigen::VectorXd smooth_random_function(const Grid& g, std::uint64_t stream_seed, double delta,
                                       double amplitude);

// Pointwise orthogonal field: Cayley transform (I - W)^{-1} (I + W) of a
// smooth antisymmetric field W.
MatrixField random_orthogonal_field(const Grid& g, int m, std::uint64_t seed, double delta);

// Smooth antisymmetric field, pointwise in so(m).
MatrixField random_antisymmetric_field(const Grid& g, int m, std::uint64_t seed, double delta);

}  // namespace fraclab
