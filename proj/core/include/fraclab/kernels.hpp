#pragma once

#include <cstdint>

#include "fraclab/kernel.hpp"
#include "fraclab/profiles.hpp"

namespace fraclab {

// (Q(x) - Q(y)) / |x - y|^{3/2}; gamma = 3/2, singular diagonal.
Kernel kernel_dhalf(const MatrixField& Q, Geometry geo = Geometry::periodic);

// (Q(x) - Q(y)) sgn(x - y) / |x - y|^{3/2}: same modulus as kernel_dhalf,
// symmetric instead of anti-self-dual. Used by the compensation ablation.
Kernel kernel_dhalf_self_dual(const MatrixField& Q, Geometry geo = Geometry::periodic);

// Symmetric kernel of R o Q o R off the diagonal, from the split z-integral
//   int_{z near x} (Q(z)-Q(x)) H(x-z) H(z-y) dz + int_{z near y} (Q(z)-Q(y)) H(x-z) H(z-y) dz
// with H the periodic 1/(pi t) kernel. Halves are decided by cyclic distance
// (ties weighted 1/2), the removable points z = x, z = y take their limits,
// and the periodic image term (Q(x) + Q(y)) / 4R is added.
Kernel kernel_RQ(const MatrixField& Q);

// Kernel of R o (Q.D - D.Q - (DQ).) with the unnormalized D, i.e.
//   -int H(x-z) (Q(y)-Q(z)) |z-y|^{-3/2} dz + H(x-y) (D Q)(y).
// The z-sum omits z = x and adds the omitted-cell term of the Riesz
// quadrature. Diagonal entries keep their quadrature value (finite policy).
Kernel kernel_TRQ(const MatrixField& Q);

// K(x,y) - K(y,x)^T of kernel_TRQ; anti-self-dual by construction.
Kernel antisymmetrize_SQ(const MatrixField& Q);
Kernel antisymmetrize(const Kernel& K);

// G(x, y) = P(x) K(x, y) P(y)^T.
Kernel adjoint_multiply(const MatrixField& P, const Kernel& K);

// Multiplier |xi|^s applied to each column function x -> K(x, y_j), diagonal
// values included as stored. Requires 0 < s < 1/2.
Kernel kernel_frac_lap_first_slot(const Kernel& K, double s);

// Pseudo-random anti-self-dual kernel with finite entries everywhere.
Kernel random_anti_self_dual_kernel(const Grid& g, int m, std::uint64_t seed);

}  // namespace fraclab
