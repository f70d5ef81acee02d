#pragma once

#include <string>

#include "fraclab/fields.hpp"

namespace fraclab {

enum class DiagonalPolicy { singular, finite };

enum class KernelTag { none, anti_self_dual, symmetric };

const char* to_string(DiagonalPolicy p);
const char* to_string(KernelTag t);

// Two-point m x m block kernel. Stored as the (nm x nm) row-major matrix whose
// block (i, j) is K(x_i, y_j). For singular kernels the diagonal blocks are a
// policy marker: they hold zeros and no consumer reads them as values.
class Kernel {
public:
  Kernel() = default;
  Kernel(const Grid& g, int m, DiagonalPolicy policy, double gamma, std::string label);

  const Grid& grid() const { return grid_; }
  int m() const { return m_; }
  int n() const { return grid_.n(); }
  DiagonalPolicy diagonal() const { return policy_; }
  double gamma() const { return gamma_; }
  const std::string& label() const { return label_; }
  KernelTag tag() const { return tag_; }

  void set_label(std::string l) { label_ = std::move(l); }
  void set_diagonal(DiagonalPolicy p);

  RowMatrix& matrix() { return M_; }
  const RowMatrix& matrix() const { return M_; }

  auto block(int i, int j) { return M_.block(i * m_, j * m_, m_, m_); }
  auto block(int i, int j) const { return M_.block(i * m_, j * m_, m_, m_); }
  double& operator()(int i, int j) { return M_(i, j); }
  double operator()(int i, int j) const { return M_(i, j); }

  // Largest |K(x_i,y_j) + K(y_j,x_i)^T| over off-diagonal (i, j), and the
  // same for the symmetric defect with a minus sign.
  double anti_self_dual_defect() const;
  double symmetric_defect() const;

  // Sets the tag by scanning the entries.
  KernelTag detect_tag(double tol = 1e-10);
  // Throws std::domain_error when the stored tag fails a direct scan.
  void check_tag(double tol = 1e-10) const;
  void set_tag_unchecked(KernelTag t) { tag_ = t; }

  Kernel& operator*=(double s);

private:
  Grid grid_;
  int m_ = 0;
  DiagonalPolicy policy_ = DiagonalPolicy::finite;
  double gamma_ = 0.0;
  std::string label_;
  KernelTag tag_ = KernelTag::none;
  RowMatrix M_;
};

// K(y, x)^T, the kernel of the adjoint operator.
Kernel adjoint(const Kernel& K);
Kernel operator-(const Kernel& a, const Kernel& b);

// int K(x, y) v(y) dy by the rectangle rule, diagonal skipped when singular.
VectorField integral_apply(const Kernel& K, const VectorField& v);

// Row sums int K(x, y) dy and column sums int K(x, y) dx (m = 1).
Eigen::VectorXd row_integral(const Kernel& K);
Eigen::VectorXd column_integral(const Kernel& K);

}  // namespace fraclab
