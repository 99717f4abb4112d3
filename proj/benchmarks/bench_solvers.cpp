#include <benchmark/benchmark.h>

#include "sobolev/builders.hpp"
#include "sobolev/hiep.hpp"
#include "sobolev/quadrature.hpp"
#include "sobolev/random.hpp"
#include "sobolev/spectrum.hpp"

using namespace sobolev;

namespace {

SpectralData random_instance(int max_dim) {
  Rng rng(20240101);
  RandomSpectralOptions opts;
  opts.max_dim = max_dim;
  opts.min_dim = max_dim;
  return random_spectral_data(rng, opts);
}

template <hiep::SolverKind Kind> void BM_RandomHiep(benchmark::State& state) {
  const auto data = random_instance(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hiep::solve(data, Kind));
  state.SetComplexityN(state.range(0));
}

template <hiep::SolverKind Kind> void BM_SameMeasure(benchmark::State& state) {
  const auto data = build_same_measure(quadrature::gauss_legendre(int(state.range(0))), {1.0, 100.0});
  for (auto _ : state) benchmark::DoNotOptimize(hiep::solve(data, Kind));
  state.SetComplexityN(state.range(0));
}

void BM_HessenbergEigenvalues(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto data = build_same_measure(quadrature::gauss_legendre(n), {1.0, 100.0});
  const auto h = hiep::solve(data, hiep::SolverKind::update_rotations).h.leading(n);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum::hessenberg_eigenvalues(h));
  state.SetComplexityN(n);
}

void BM_GaussLaguerre(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quadrature::gauss_laguerre(int(state.range(0)), -0.5));
  state.SetComplexityN(state.range(0));
}

} // namespace

BENCHMARK(BM_RandomHiep<hiep::SolverKind::arnoldi>)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK(BM_RandomHiep<hiep::SolverKind::update_householder>)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK(BM_RandomHiep<hiep::SolverKind::update_rotations>)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK(BM_SameMeasure<hiep::SolverKind::arnoldi>)->RangeMultiplier(2)->Range(16, 256)->Complexity();
BENCHMARK(BM_SameMeasure<hiep::SolverKind::update_householder>)->RangeMultiplier(2)->Range(16, 256)->Complexity();
BENCHMARK(BM_SameMeasure<hiep::SolverKind::update_rotations>)->RangeMultiplier(2)->Range(16, 256)->Complexity();
BENCHMARK(BM_HessenbergEigenvalues)->RangeMultiplier(2)->Range(16, 128)->Complexity();
BENCHMARK(BM_GaussLaguerre)->RangeMultiplier(2)->Range(16, 256)->Complexity();
BENCHMARK_MAIN();
