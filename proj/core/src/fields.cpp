#include "fraclab/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace fraclab {

namespace {
void require_same(const Grid& a, const Grid& b, int ma, int mb, const char* what) {
  if (a != b || ma != mb) throw std::invalid_argument(std::string(what) + ": grid or dimension mismatch");
}
}  // namespace

VectorField::VectorField(const Grid& g, int m) : grid_(g), m_(m), data_(Eigen::VectorXd::Zero(g.n() * m)) {}

VectorField::VectorField(const Grid& g, int m, Eigen::VectorXd data) : grid_(g), m_(m), data_(std::move(data)) {
  if (data_.size() != g.n() * m) throw std::invalid_argument("VectorField: sample count mismatch");
}

VectorField VectorField::from_function(const Grid& g, const std::function<double(double)>& f) {
  VectorField v(g, 1);
  for (int i = 0; i < g.n(); ++i) v.data_[i] = f(g.point(i));
  return v;
}

VectorField VectorField::scalar(const Grid& g, Eigen::VectorXd values) { return VectorField(g, 1, std::move(values)); }

Eigen::VectorXd VectorField::component(int a) const {
  Eigen::VectorXd c(n());
  for (int i = 0; i < n(); ++i) c[i] = data_[i * m_ + a];
  return c;
}

void VectorField::set_component(int a, const Eigen::VectorXd& c) {
  for (int i = 0; i < n(); ++i) data_[i * m_ + a] = c[i];
}

VectorField& VectorField::operator+=(const VectorField& o) {
  require_same(grid_, o.grid_, m_, o.m_, "VectorField +=");
  data_ += o.data_;
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  require_same(grid_, o.grid_, m_, o.m_, "VectorField -=");
  data_ -= o.data_;
  return *this;
}

VectorField& VectorField::operator*=(double s) {
  data_ *= s;
  return *this;
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double s, VectorField a) { return a *= s; }

const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::none: return "none";
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::antisymmetric: return "antisymmetric";
    case Symmetry::orthogonal: return "orthogonal";
  }
  return "?";
}

MatrixField::MatrixField(const Grid& g, int m, Symmetry tag)
    : grid_(g), m_(m), tag_(tag), data_(Eigen::VectorXd::Zero(g.n() * m * m)) {}

MatrixField MatrixField::scalar(const Grid& g, const Eigen::VectorXd& values) {
  MatrixField Q(g, 1, Symmetry::symmetric);
  Q.data_ = values;
  return Q;
}

MatrixField MatrixField::identity(const Grid& g, int m) {
  MatrixField P(g, m, Symmetry::orthogonal);
  for (int i = 0; i < g.n(); ++i) P.block(i).setIdentity();
  return P;
}

Eigen::VectorXd MatrixField::entry(int a, int b) const {
  Eigen::VectorXd e(n());
  for (int i = 0; i < n(); ++i) e[i] = (*this)(i, a, b);
  return e;
}

void MatrixField::set_entry(int a, int b, const Eigen::VectorXd& e) {
  for (int i = 0; i < n(); ++i) (*this)(i, a, b) = e[i];
}

double MatrixField::symmetry_defect() const {
  double worst = 0.0;
  for (int i = 0; i < n(); ++i) {
    auto B = block(i);
    double d = 0.0;
    switch (tag_) {
      case Symmetry::none: break;
      case Symmetry::symmetric: d = (B - B.transpose()).cwiseAbs().maxCoeff(); break;
      case Symmetry::antisymmetric: d = (B + B.transpose()).cwiseAbs().maxCoeff(); break;
      case Symmetry::orthogonal:
        d = (B.transpose() * B - RowMatrix::Identity(m_, m_)).cwiseAbs().maxCoeff();
        break;
    }
    worst = std::max(worst, d);
  }
  return worst;
}

void MatrixField::check_tag(double tol) const {
  const double d = symmetry_defect();
  if (!(d <= tol))
    throw std::domain_error(std::string("MatrixField: ") + to_string(tag_) + " tag violated by " + std::to_string(d));
}

MatrixField& MatrixField::operator+=(const MatrixField& o) {
  require_same(grid_, o.grid_, m_, o.m_, "MatrixField +=");
  data_ += o.data_;
  if (tag_ != o.tag_ || tag_ == Symmetry::orthogonal) tag_ = Symmetry::none;
  return *this;
}

MatrixField& MatrixField::operator*=(double s) {
  data_ *= s;
  if (tag_ == Symmetry::orthogonal && std::abs(s) != 1.0) tag_ = Symmetry::none;
  return *this;
}

VectorField apply(const MatrixField& P, const VectorField& v) {
  require_same(P.grid(), v.grid(), P.m(), v.m(), "apply");
  const int m = v.m();
  VectorField out(v.grid(), m);
  for (int i = 0; i < v.n(); ++i)
    out.data().segment(i * m, m) = P.block(i) * v.data().segment(i * m, m);
  return out;
}

MatrixField multiply(const MatrixField& A, const MatrixField& B) {
  require_same(A.grid(), B.grid(), A.m(), B.m(), "multiply");
  MatrixField C(A.grid(), A.m());
  for (int i = 0; i < A.n(); ++i) C.block(i) = A.block(i) * B.block(i);
  return C;
}

MatrixField transpose(const MatrixField& A) {
  Symmetry t = A.tag();
  MatrixField T(A.grid(), A.m(), t);
  for (int i = 0; i < A.n(); ++i) T.block(i) = A.block(i).transpose();
  return T;
}

Eigen::VectorXd integrate(const VectorField& f) {
  Eigen::VectorXd s = Eigen::VectorXd::Zero(f.m());
  for (int i = 0; i < f.n(); ++i) s += f.data().segment(i * f.m(), f.m());
  return s * f.grid().spacing();
}

Eigen::VectorXd integrate(const MatrixField& f) {
  const int mm = f.m() * f.m();
  Eigen::VectorXd s = Eigen::VectorXd::Zero(mm);
  for (int i = 0; i < f.n(); ++i) s += f.data().segment(i * mm, mm);
  return s * f.grid().spacing();
}

double inner(const VectorField& a, const VectorField& b) {
  require_same(a.grid(), b.grid(), a.m(), b.m(), "inner");
  return a.data().dot(b.data()) * a.grid().spacing();
}

VectorField shift(const VectorField& f, int k) {
  const int n = f.n(), m = f.m();
  if (std::abs(k) >= n) throw std::invalid_argument("shift: |k| must be < n");
  VectorField out(f.grid(), m);
  for (int i = 0; i < n; ++i) {
    const int src = ((i + k) % n + n) % n;
    out.data().segment(i * m, m) = f.data().segment(src * m, m);
  }
  return out;
}

VectorField remove_mean(const VectorField& f) {
  Eigen::VectorXd mean = integrate(f) / f.grid().length();
  VectorField out = f;
  for (int i = 0; i < f.n(); ++i) out.data().segment(i * f.m(), f.m()) -= mean;
  return out;
}

double tail_fraction(const VectorField& f) {
  const Grid& g = f.grid();
  double outside = 0.0, total = 0.0;
  for (int i = 0; i < g.n(); ++i) {
    const double e = f.data().segment(i * f.m(), f.m()).squaredNorm();
    total += e;
    if (std::abs(g.point(i)) > 0.5 * g.radius()) outside += e;
  }
  return total > 0.0 ? std::sqrt(outside / total) : 0.0;
}

Eigen::VectorXd derivative(const Grid& g, const Eigen::VectorXd& f) {
  const int n = g.n();
  Eigen::VectorXd d(n);
  auto at = [&](int i) { return f[((i % n) + n) % n]; };
  for (int i = 0; i < n; ++i)
    d[i] = (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) / (12.0 * g.spacing());
  return d;
}

Eigen::VectorXd second_derivative(const Grid& g, const Eigen::VectorXd& f) {
  const int n = g.n();
  const double h2 = g.spacing() * g.spacing();
  Eigen::VectorXd d(n);
  auto at = [&](int i) { return f[((i % n) + n) % n]; };
  for (int i = 0; i < n; ++i)
    d[i] = (-at(i - 2) + 16.0 * at(i - 1) - 30.0 * at(i) + 16.0 * at(i + 1) - at(i + 2)) / (12.0 * h2);
  return d;
}

VectorField derivative(const VectorField& f) {
  VectorField out(f.grid(), f.m());
  for (int a = 0; a < f.m(); ++a) out.set_component(a, derivative(f.grid(), f.component(a)));
  return out;
}

MatrixField derivative(const MatrixField& f) {
  MatrixField out(f.grid(), f.m(), f.tag() == Symmetry::orthogonal ? Symmetry::none : f.tag());
  for (int a = 0; a < f.m(); ++a)
    for (int b = 0; b < f.m(); ++b) out.set_entry(a, b, derivative(f.grid(), f.entry(a, b)));
  return out;
}

}  // namespace fraclab
