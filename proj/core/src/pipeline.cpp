#include "fraclab/pipeline.hpp"

#include <stdexcept>

#include "fraclab/kernel.hpp"
#include "fraclab/multicomm.hpp"

namespace fraclab {

namespace {
template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;
}  // namespace

OperatorPipeline& OperatorPipeline::multiply(const MatrixField& P) {
  if (P.grid() != grid_ || P.m() != m_) throw std::invalid_argument("pipeline multiply: grid/dimension mismatch");
  stages_.push_back(stage::Multiply{P});
  return *this;
}

OperatorPipeline& OperatorPipeline::frac_laplacian(double s, Backend b) {
  stages_.push_back(stage::FracLaplacian{s, b});
  return *this;
}

OperatorPipeline& OperatorPipeline::riesz(Backend b) {
  stages_.push_back(stage::Riesz{b});
  return *this;
}

OperatorPipeline& OperatorPipeline::kernel(std::shared_ptr<const Kernel> K, bool multicommutator) {
  if (!K || K->grid() != grid_ || K->m() != m_) throw std::invalid_argument("pipeline kernel: grid/dimension mismatch");
  stages_.push_back(stage::KernelApply{std::move(K), multicommutator});
  return *this;
}

OperatorPipeline& OperatorPipeline::sum(std::vector<OperatorPipeline> terms) {
  for (const auto& t : terms)
    if (t.grid() != grid_ || t.m() != m_) throw std::invalid_argument("pipeline sum: grid/dimension mismatch");
  stages_.push_back(stage::Sum{std::move(terms)});
  return *this;
}

OperatorPipeline& OperatorPipeline::scale(double c) {
  stages_.push_back(stage::Scale{c});
  return *this;
}

VectorField OperatorPipeline::apply(const VectorField& f) const {
  if (f.grid() != grid_ || f.m() != m_) throw std::invalid_argument("apply_pipeline: grid/dimension mismatch");
  VectorField cur = f;
  for (const Stage& st : stages_) {
    cur = std::visit(overloaded{
                         [&](const stage::Multiply& s) { return fraclab::apply(s.P, cur); },
                         [&](const stage::FracLaplacian& s) { return fraclab::frac_laplacian(cur, s.s, s.backend); },
                         [&](const stage::Riesz& s) { return fraclab::riesz(cur, s.backend); },
                         [&](const stage::KernelApply& s) {
                           return s.multicommutator ? apply_TK(*s.K, cur) : integral_apply(*s.K, cur);
                         },
                         [&](const stage::Sum& s) {
                           VectorField acc(grid_, m_);
                           for (const auto& t : s.terms) acc += t.apply(cur);
                           return acc;
                         },
                         [&](const stage::Scale& s) { return s.c * cur; },
                     },
                     st);
  }
  return cur;
}

VectorField apply_pipeline(const OperatorPipeline& p, const VectorField& f) { return p.apply(f); }

}  // namespace fraclab
