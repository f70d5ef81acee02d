#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fraclab/pipeline.hpp"

namespace fraclab {

// Composed commutators; D = (-Delta)^{1/4} with symbol |xi|^{1/2}, R the Riesz
// transform, "X." multiplication by the field X:
//   dhalf   Q.D - D.Q
//   RQ      R o dhalf
//   LQ      dhalf o R
//   T3      D(Q v) - Q D v + (DQ) v
//   TSQ_R   R o A - A o R - 2 (DQ). o R - 2 (R DQ).,   A = Q.D - D.Q - (DQ).
//   TSQ_RR  R o dhalf o R + (R DQ). o R + R o (R DQ). - (DQ).
//   VPQ     (PQ).D - P.D.Q + Q.D.P - D.(QP) - [P (DQ) + D(QP) - Q (DP)].
//   CRW     Q.R + (R Q).
//   opL     R.Q.R.D - D.R.Q.R - F. o R - R o F. - (R F).,   F = -R DQ
// Throws std::invalid_argument on an unknown name, a missing P, or a Q that
// violates the symmetry these operators require.
OperatorPipeline build_named_operator(const std::string& name, const MatrixField& Q,
                                      const std::optional<MatrixField>& P = std::nullopt,
                                      Backend b = Backend::multiplier);

std::vector<std::string> named_operator_names();

}  // namespace fraclab
