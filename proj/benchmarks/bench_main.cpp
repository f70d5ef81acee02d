#include <benchmark/benchmark.h>

#include "fraclab/ensemble.hpp"
#include "fraclab/eps.hpp"
#include "fraclab/fracops.hpp"
#include "fraclab/kernel_norms.hpp"
#include "fraclab/kernels.hpp"
#include "fraclab/multicomm.hpp"
#include "fraclab/norms.hpp"

using namespace fraclab;

namespace {

EnsembleSample sample(const Grid& g, int m) {
  EnsembleSpec spec;
  spec.seed = 3;
  spec.m = m;
  return sample_trial(spec, g, 0);
}

void BM_FracLaplacian(benchmark::State& state) {
  const Grid g = make_grid(16.0, static_cast<int>(state.range(0)));
  const Backend b = state.range(1) ? Backend::quadrature : Backend::multiplier;
  const VectorField f = sample(g, 1).v;
  for (auto _ : state) benchmark::DoNotOptimize(frac_laplacian(f, 0.5, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FracLaplacian)->ArgsProduct({{256, 1024, 4096}, {0, 1}});

void BM_KernelDhalf(benchmark::State& state) {
  const Grid g = make_grid(16.0, static_cast<int>(state.range(0)));
  const EnsembleSample s = sample(g, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_dhalf(s.Q));
}
BENCHMARK(BM_KernelDhalf)->ArgsProduct({{256, 1024}, {1, 2}})->Unit(benchmark::kMillisecond);

void BM_ApplyTK(benchmark::State& state) {
  const Grid g = make_grid(16.0, static_cast<int>(state.range(0)));
  const EnsembleSample s = sample(g, 2);
  const Kernel K = kernel_dhalf(s.Q);
  for (auto _ : state) benchmark::DoNotOptimize(apply_TK(K, s.v));
}
BENCHMARK(BM_ApplyTK)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_KernelBesovNorm(benchmark::State& state) {
  const Grid g = make_grid(16.0, static_cast<int>(state.range(0)));
  const Kernel K = kernel_dhalf(sample(g, 1).Q);
  const KernelNormParams np{-0.25, 4.0, 2.0, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(kernel_besov_norm(K, np));
}
BENCHMARK(BM_KernelBesovNorm)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_AdjointMultiply(benchmark::State& state) {
  const Grid g = make_grid(16.0, static_cast<int>(state.range(0)));
  const Kernel K = kernel_dhalf(sample(g, 2).Q);
  const MatrixField P = random_orthogonal_field(g, 2, 5, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(adjoint_multiply(P, K));
}
BENCHMARK(BM_AdjointMultiply)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_FracLapFirstSlot(benchmark::State& state) {
  const Grid g = make_grid(16.0, static_cast<int>(state.range(0)));
  const Kernel K = kernel_dhalf(sample(g, 1).Q);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_frac_lap_first_slot(K, 0.25));
}
BENCHMARK(BM_FracLapFirstSlot)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_EpsSigmaMin(benchmark::State& state) {
  const Grid g = make_grid(8.0, static_cast<int>(state.range(0)));
  const Kernel K(g, 2, DiagonalPolicy::finite, 0.0, "0");
  const EpsSystem sys = make_eps_system(K, random_antisymmetric_field(g, 2, 4, 1.0), 0.25, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(eps_sigma_min(sys));
}
BENCHMARK(BM_EpsSigmaMin)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_LorentzNorm(benchmark::State& state) {
  const Grid g = make_grid(16.0, static_cast<int>(state.range(0)));
  const VectorField f = sample(g, 1).v;
  for (auto _ : state) benchmark::DoNotOptimize(lorentz_norm(f, 2.0, kInf));
}
BENCHMARK(BM_LorentzNorm)->Arg(1024)->Arg(16384);

}  // namespace
BENCHMARK_MAIN();
