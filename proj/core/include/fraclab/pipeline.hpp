#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fraclab/fields.hpp"
#include "fraclab/fracops.hpp"

namespace fraclab {

class Kernel;
class OperatorPipeline;

namespace stage {
struct Multiply {
  MatrixField P;
};
struct FracLaplacian {
  double s;
  Backend backend;
};
struct Riesz {
  Backend backend;
};
// Either the integral operator v -> int K(x,y) v(y) dy or the
// multi-commutator T_K.
struct KernelApply {
  std::shared_ptr<const Kernel> K;
  bool multicommutator;
};
// Applies every term to the current field and sums the results.
struct Sum {
  std::vector<OperatorPipeline> terms;
};
struct Scale {
  double c;
};
}  // namespace stage

using Stage = std::variant<stage::Multiply, stage::FracLaplacian, stage::Riesz, stage::KernelApply,
                           stage::Sum, stage::Scale>;

// Stages run left to right: {A, B} maps f to B(A(f)).
class OperatorPipeline {
public:
  OperatorPipeline(const Grid& g, int m) : grid_(g), m_(m) {}

  const Grid& grid() const { return grid_; }
  int m() const { return m_; }
  const std::vector<Stage>& stages() const { return stages_; }
  bool empty() const { return stages_.empty(); }

  OperatorPipeline& multiply(const MatrixField& P);
  OperatorPipeline& frac_laplacian(double s, Backend b = Backend::multiplier);
  OperatorPipeline& riesz(Backend b = Backend::multiplier);
  OperatorPipeline& kernel(std::shared_ptr<const Kernel> K, bool multicommutator);
  OperatorPipeline& sum(std::vector<OperatorPipeline> terms);
  OperatorPipeline& scale(double c);

  VectorField apply(const VectorField& f) const;

private:
  Grid grid_;
  int m_;
  std::vector<Stage> stages_;
};

VectorField apply_pipeline(const OperatorPipeline& p, const VectorField& f);

}  // namespace fraclab
