#include "fraclab/named_ops.hpp"

#include <stdexcept>

#include "fraclab/fracops.hpp"

namespace fraclab {

namespace {

constexpr double kHalf = 0.5;

struct Builder {
  Grid g;
  int m;
  Backend b;

  OperatorPipeline id() const { return OperatorPipeline(g, m); }
  OperatorPipeline mul(const MatrixField& P) const { return id().multiply(P); }
  OperatorPipeline D() const { return id().frac_laplacian(kHalf, b); }
  OperatorPipeline R() const { return id().riesz(b); }

  // left-to-right concatenation: then(a, b) = b o a
  static OperatorPipeline then(OperatorPipeline a, const OperatorPipeline& c) {
    for (const Stage& s : c.stages()) {
      std::visit([&](const auto& st) { push(a, st); }, s);
    }
    return a;
  }
  static void push(OperatorPipeline& p, const stage::Multiply& s) { p.multiply(s.P); }
  static void push(OperatorPipeline& p, const stage::FracLaplacian& s) { p.frac_laplacian(s.s, s.backend); }
  static void push(OperatorPipeline& p, const stage::Riesz& s) { p.riesz(s.backend); }
  static void push(OperatorPipeline& p, const stage::KernelApply& s) { p.kernel(s.K, s.multicommutator); }
  static void push(OperatorPipeline& p, const stage::Sum& s) { p.sum(s.terms); }
  static void push(OperatorPipeline& p, const stage::Scale& s) { p.scale(s.c); }

  OperatorPipeline sum(std::vector<OperatorPipeline> terms) const { return id().sum(std::move(terms)); }
  static OperatorPipeline scaled(OperatorPipeline p, double c) { return p.scale(c); }
};

void require_symmetric(const MatrixField& Q, const std::string& name) {
  if (Q.tag() != Symmetry::symmetric)
    throw std::invalid_argument(name + ": Q must carry the symmetric tag");
  Q.check_tag();
}

MatrixField field_DQ(const MatrixField& Q, Backend b) { return frac_laplacian(Q, kHalf, b); }

}  // namespace

std::vector<std::string> named_operator_names() {
  return {"dhalf", "RQ", "LQ", "T3", "TSQ_R", "TSQ_RR", "VPQ", "CRW", "opL"};
}

OperatorPipeline build_named_operator(const std::string& name, const MatrixField& Q,
                                      const std::optional<MatrixField>& P, Backend b) {
  const Builder B{Q.grid(), Q.m(), b};
  using OP = OperatorPipeline;
  auto then = [](OP a, const OP& c) { return Builder::then(std::move(a), c); };

  // d = Q.D - D.Q
  auto dhalf = [&] { return B.sum({then(B.D(), B.mul(Q)), Builder::scaled(then(B.mul(Q), B.D()), -1.0)}); };

  if (name == "dhalf") return dhalf();
  if (name == "RQ") return then(dhalf(), B.R());
  if (name == "LQ") return then(B.R(), dhalf());
  if (name == "T3") {
    const MatrixField DQ = field_DQ(Q, b);
    return B.sum({then(B.mul(Q), B.D()), Builder::scaled(then(B.D(), B.mul(Q)), -1.0), B.mul(DQ)});
  }
  if (name == "TSQ_R") {
    require_symmetric(Q, name);
    const MatrixField DQ = field_DQ(Q, b);
    const MatrixField RDQ = riesz(DQ, b);
    const OP A = B.sum({then(B.D(), B.mul(Q)), Builder::scaled(then(B.mul(Q), B.D()), -1.0),
                        Builder::scaled(B.mul(DQ), -1.0)});
    return B.sum({then(A, B.R()), Builder::scaled(then(B.R(), A), -1.0), Builder::scaled(then(B.R(), B.mul(DQ)), -2.0),
                  Builder::scaled(B.mul(RDQ), -2.0)});
  }
  if (name == "TSQ_RR") {
    require_symmetric(Q, name);
    const MatrixField DQ = field_DQ(Q, b);
    const MatrixField RDQ = riesz(DQ, b);
    return B.sum({then(then(B.R(), dhalf()), B.R()), then(B.R(), B.mul(RDQ)), then(B.mul(RDQ), B.R()),
                  Builder::scaled(B.mul(DQ), -1.0)});
  }
  if (name == "VPQ") {
    if (!P) throw std::invalid_argument("VPQ: requires P");
    if (P->grid() != Q.grid() || P->m() != Q.m()) throw std::invalid_argument("VPQ: P/Q mismatch");
    const MatrixField PQ = multiply(*P, Q);
    const MatrixField QP = multiply(Q, *P);
    const MatrixField DQ = field_DQ(Q, b);
    const MatrixField DP = field_DQ(*P, b);
    const MatrixField DQP = field_DQ(QP, b);
    MatrixField lower = multiply(*P, DQ);
    lower += DQP;
    MatrixField QDP = multiply(Q, DP);
    QDP *= -1.0;
    lower += QDP;
    return B.sum({then(B.D(), B.mul(PQ)), Builder::scaled(then(then(B.mul(Q), B.D()), B.mul(*P)), -1.0),
                  then(then(B.mul(*P), B.D()), B.mul(Q)), Builder::scaled(then(B.mul(QP), B.D()), -1.0),
                  Builder::scaled(B.mul(lower), -1.0)});
  }
  if (name == "CRW") {
    return B.sum({then(B.R(), B.mul(Q)), B.mul(riesz(Q, b))});
  }
  if (name == "opL") {
    require_symmetric(Q, name);
    MatrixField F = riesz(field_DQ(Q, b), b);
    F *= -1.0;
    const MatrixField RF = riesz(F, b);
    const OP RQRD = then(then(then(B.D(), B.R()), B.mul(Q)), B.R());
    const OP DRQR = then(then(then(B.R(), B.mul(Q)), B.R()), B.D());
    return B.sum({RQRD, Builder::scaled(DRQR, -1.0), Builder::scaled(then(B.R(), B.mul(F)), -1.0),
                  Builder::scaled(then(B.mul(F), B.R()), -1.0), Builder::scaled(B.mul(RF), -1.0)});
  }
  throw std::invalid_argument("unknown named operator '" + name + "'");
}

}  // namespace fraclab
