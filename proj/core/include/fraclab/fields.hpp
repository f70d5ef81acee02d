#pragma once

#include <functional>
#include <Eigen/Core>

#include "fraclab/grid.hpp"

namespace fraclab {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// R^m-valued samples, stored point-major: entry (i, a) at i*m + a.
class VectorField {
public:
  VectorField() = default;
  VectorField(const Grid& g, int m);
  VectorField(const Grid& g, int m, Eigen::VectorXd data);

  static VectorField from_function(const Grid& g, const std::function<double(double)>& f);
  static VectorField scalar(const Grid& g, Eigen::VectorXd values);

  const Grid& grid() const { return grid_; }
  int m() const { return m_; }
  int n() const { return grid_.n(); }

  double& operator()(int i, int a) { return data_[i * m_ + a]; }
  double operator()(int i, int a) const { return data_[i * m_ + a]; }

  Eigen::VectorXd component(int a) const;
  void set_component(int a, const Eigen::VectorXd& c);

  Eigen::VectorXd& data() { return data_; }
  const Eigen::VectorXd& data() const { return data_; }

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(double s);

  bool all_finite() const { return data_.allFinite(); }

private:
  Grid grid_;
  int m_ = 0;
  Eigen::VectorXd data_;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double s, VectorField a);

enum class Symmetry { none, symmetric, antisymmetric, orthogonal };

const char* to_string(Symmetry s);

// M_m(R)-valued samples; block i is row-major at offset i*m*m.
class MatrixField {
public:
  MatrixField() = default;
  MatrixField(const Grid& g, int m, Symmetry tag = Symmetry::none);

  static MatrixField scalar(const Grid& g, const Eigen::VectorXd& values);
  static MatrixField identity(const Grid& g, int m);

  const Grid& grid() const { return grid_; }
  int m() const { return m_; }
  int n() const { return grid_.n(); }
  Symmetry tag() const { return tag_; }
  void set_tag(Symmetry t) { tag_ = t; }

  double& operator()(int i, int a, int b) { return data_[(i * m_ + a) * m_ + b]; }
  double operator()(int i, int a, int b) const { return data_[(i * m_ + a) * m_ + b]; }

  Eigen::Map<RowMatrix> block(int i) { return {data_.data() + i * m_ * m_, m_, m_}; }
  Eigen::Map<const RowMatrix> block(int i) const { return {data_.data() + i * m_ * m_, m_, m_}; }

  // Samples of one matrix entry as a scalar function.
  Eigen::VectorXd entry(int a, int b) const;
  void set_entry(int a, int b, const Eigen::VectorXd& e);

  Eigen::VectorXd& data() { return data_; }
  const Eigen::VectorXd& data() const { return data_; }

  // Largest deviation from the declared tag over all points.
  double symmetry_defect() const;
  // Throws std::domain_error when the tag is violated beyond tol.
  void check_tag(double tol = 1e-12) const;

  MatrixField& operator+=(const MatrixField& o);
  MatrixField& operator*=(double s);

private:
  Grid grid_;
  int m_ = 0;
  Symmetry tag_ = Symmetry::none;
  Eigen::VectorXd data_;
};

// Pointwise products.
VectorField apply(const MatrixField& P, const VectorField& v);
MatrixField multiply(const MatrixField& A, const MatrixField& B);
MatrixField transpose(const MatrixField& A);

// Rectangle rule, componentwise.
Eigen::VectorXd integrate(const VectorField& f);
Eigen::VectorXd integrate(const MatrixField& f);
double inner(const VectorField& a, const VectorField& b);

// Periodic shift by k cells: result(i) = f(i + k).
VectorField shift(const VectorField& f, int k);

VectorField remove_mean(const VectorField& f);

// Fraction of the L^2 mass outside [-R/2, R/2].
double tail_fraction(const VectorField& f);

// Fourth-order periodic central differences.
Eigen::VectorXd derivative(const Grid& g, const Eigen::VectorXd& f);
Eigen::VectorXd second_derivative(const Grid& g, const Eigen::VectorXd& f);
VectorField derivative(const VectorField& f);
MatrixField derivative(const MatrixField& f);

}  // namespace fraclab
