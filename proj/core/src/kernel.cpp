#include "fraclab/kernel.hpp"

#include <stdexcept>

namespace fraclab {

const char* to_string(DiagonalPolicy p) { return p == DiagonalPolicy::singular ? "singular" : "finite"; }

const char* to_string(KernelTag t) {
  switch (t) {
    case KernelTag::none: return "none";
    case KernelTag::anti_self_dual: return "anti-self-dual";
    case KernelTag::symmetric: return "symmetric";
  }
  return "?";
}

Kernel::Kernel(const Grid& g, int m, DiagonalPolicy policy, double gamma, std::string label)
    : grid_(g), m_(m), policy_(policy), gamma_(gamma), label_(std::move(label)),
      M_(RowMatrix::Zero(g.n() * m, g.n() * m)) {}

void Kernel::set_diagonal(DiagonalPolicy p) {
  policy_ = p;
  if (p == DiagonalPolicy::singular)
    for (int i = 0; i < n(); ++i) block(i, i).setZero();
}

namespace {
double defect(const RowMatrix& M, int n, int m, double sign) {
  // max over i != j of |K_ij + sign * K_ji^T|
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          worst = std::max(worst, std::abs(M(i * m + a, j * m + b) + sign * M(j * m + b, i * m + a)));
  return worst;
}
}  // namespace

double Kernel::anti_self_dual_defect() const { return defect(M_, n(), m_, +1.0); }
double Kernel::symmetric_defect() const { return defect(M_, n(), m_, -1.0); }

KernelTag Kernel::detect_tag(double tol) {
  const double scale = std::max(1.0, M_.cwiseAbs().maxCoeff());
  if (anti_self_dual_defect() <= tol * scale)
    tag_ = KernelTag::anti_self_dual;
  else if (symmetric_defect() <= tol * scale)
    tag_ = KernelTag::symmetric;
  else
    tag_ = KernelTag::none;
  return tag_;
}

void Kernel::check_tag(double tol) const {
  const double scale = std::max(1.0, M_.cwiseAbs().maxCoeff());
  double d = 0.0;
  if (tag_ == KernelTag::anti_self_dual) d = anti_self_dual_defect();
  if (tag_ == KernelTag::symmetric) d = symmetric_defect();
  if (!(d <= tol * scale))
    throw std::domain_error("Kernel '" + label_ + "': " + to_string(tag_) + " tag violated by " + std::to_string(d));
}

Kernel& Kernel::operator*=(double s) {
  M_ *= s;
  return *this;
}

Kernel adjoint(const Kernel& K) {
  Kernel A(K.grid(), K.m(), K.diagonal(), K.gamma(), K.label() + "^*");
  A.matrix() = K.matrix().transpose();
  return A;
}

Kernel operator-(const Kernel& a, const Kernel& b) {
  if (a.grid() != b.grid() || a.m() != b.m()) throw std::invalid_argument("Kernel -: mismatch");
  const DiagonalPolicy p =
      (a.diagonal() == DiagonalPolicy::singular || b.diagonal() == DiagonalPolicy::singular) ? DiagonalPolicy::singular
                                                                                             : DiagonalPolicy::finite;
  Kernel d(a.grid(), a.m(), p, std::max(a.gamma(), b.gamma()), a.label() + "-" + b.label());
  d.matrix() = a.matrix() - b.matrix();
  d.set_diagonal(p);
  return d;
}

VectorField integral_apply(const Kernel& K, const VectorField& v) {
  if (K.grid() != v.grid() || K.m() != v.m()) throw std::invalid_argument("integral_apply: mismatch");
  const int m = K.m();
  Eigen::VectorXd out = K.matrix() * v.data();
  if (K.diagonal() == DiagonalPolicy::singular)
    for (int i = 0; i < K.n(); ++i) out.segment(i * m, m) -= K.block(i, i) * v.data().segment(i * m, m);
  return VectorField(v.grid(), m, out * K.grid().spacing());
}

Eigen::VectorXd row_integral(const Kernel& K) {
  if (K.m() != 1) throw std::invalid_argument("row_integral: scalar kernels only");
  Eigen::VectorXd r = K.matrix().rowwise().sum();
  if (K.diagonal() == DiagonalPolicy::singular) r -= K.matrix().diagonal();
  return r * K.grid().spacing();
}

Eigen::VectorXd column_integral(const Kernel& K) {
  if (K.m() != 1) throw std::invalid_argument("column_integral: scalar kernels only");
  Eigen::VectorXd c = K.matrix().colwise().sum().transpose();
  if (K.diagonal() == DiagonalPolicy::singular) c -= K.matrix().diagonal();
  return c * K.grid().spacing();
}

}  // namespace fraclab
