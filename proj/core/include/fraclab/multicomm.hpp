#pragma once

#include <string>

#include "fraclab/kernel.hpp"
#include "fraclab/kernel_norms.hpp"
#include "fraclab/norms.hpp"

namespace fraclab {

enum class DiagonalRule {
  // Diagonal cell omitted (singular kernels) or included (finite kernels).
  omit,
  // Adds the omitted cell of the pair sum for kernels with an odd 1/(x-y)
  // singularity: -dx b(x) v'(x), with b(x) estimated from the two
  // neighbouring entries as dx (K(x, x-dx) - K(x, x+dx)) / 2.
  pair_corrected,
};

// T_K(v)(x) = int [K(x,y)^T v(x) + K(x,y) v(y)] dy, evaluated as
//   sum_j dx K(x_i, y_j) (v_j - v_i) + sum_j dx (K(x_i, y_j)^T + K(x_i, y_j)) v_i.
VectorField apply_TK(const Kernel& K, const VectorField& v, DiagonalRule rule = DiagonalRule::omit);

struct DualityPair {
  double lhs;
  double rhs;
};

// lhs = <phi, T_K v>, rhs = sum_ij dx^2 (phi_i - phi_j) . K_ij v_j with the
// same cell policy as apply_TK.
DualityPair duality_pairing(const VectorField& phi, const Kernel& K, const VectorField& v);

enum class FQRoute { kernel, spectral };

// Spectral route: -R D Q. Kernel route: (1/c_{1/2}) int R_Q(x, z) kappa(x - z) dz
// with kappa = |t|^{-3/2} / H(t) on the periodic window (kappa(t) -> pi sgn(t)
// |t|^{-1/2} near the diagonal) and kappa = 0 at t = 0, R. Requires m = 1.
VectorField compute_FQ(const MatrixField& Q, FQRoute route);
VectorField compute_FQ_from_kernel(const Kernel& RQ, const MatrixField& Q);

struct StabilityPieces {
  VectorField tg;  // T_G(P v), G = P K P^T
  VectorField g;   // int (P(x) - P(y)) K(x,y)^T dy v(x)
};

// P T_K(v) = T_G(P v) + g for pointwise orthogonal P; throws otherwise.
StabilityPieces stability_decompose(const MatrixField& P, const Kernel& K, const VectorField& v);

enum class RatioStatus { ok, degenerate, hypothesis_violation };

const char* to_string(RatioStatus s);

struct CompensationRatio {
  double numerator = 0.0;     // |T_K v| in the target Besov norm
  double kernel_norm = 0.0;   // |K|_{A^{-sigma}_{p,q}}
  double v_norm = 0.0;        // |v|_{L^r}
  double ratio = 0.0;
  double removed_mean = 0.0;  // |mean of T_K v| dropped before the negative norm
  double kernel_truncation = 0.0;
  RatioStatus status = RatioStatus::ok;
  std::string note;
};

// |T_K v|_{B^{-(2/q-1+sigma)}_{rp/(p+r), q'}} / (|K|_{A^{-sigma}_{p,q}} |v|_{L^r}),
// numerator by dyadic blocks. Hypotheses r > 1, p > r', q >= 2, sigma > 0.
CompensationRatio compensation_ratio(const Kernel& K, const VectorField& v, double sigma, double p,
                                     double q, double r, DiagonalRule rule = DiagonalRule::omit);

// |T_K v|_{H^{-1/2}} / (|Q|_{H^{1/2}} |v|_{L^2}), mean of T_K v removed.
CompensationRatio three_commutator_ratio(const Kernel& K, const MatrixField& Q, const VectorField& v);

}  // namespace fraclab
