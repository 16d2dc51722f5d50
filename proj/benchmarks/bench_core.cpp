#include <benchmark/benchmark.h>

#include <numbers>

#include "msqc/discord.hpp"
#include "msqc/evolution.hpp"
#include "msqc/gaussian_fit.hpp"
#include "msqc/hamiltonian.hpp"
#include "msqc/metrics.hpp"
#include "msqc/power_map.hpp"
#include "msqc/radial_profile.hpp"
#include "msqc/spin_state.hpp"
#include "msqc/werner.hpp"

using namespace msqc;

namespace {

void BM_EvolveAnalytic(benchmark::State& state) {
  const SystemParams params{2.0, 1.0, 0.7, 1.0};
  const SpinState psi = basis_state(kPM);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.1;
    benchmark::DoNotOptimize(evolve_analytic(psi, params, t));
  }
}
BENCHMARK(BM_EvolveAnalytic);

void BM_EvolveNumeric(benchmark::State& state) {
  const Hamiltonian4 h = build_hamiltonian({2.0, 1.0, 0.7, 1.0});
  const SpinState psi = basis_state(kPM);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.1;
    benchmark::DoNotOptimize(evolve_numeric(psi, h, t));
  }
}
BENCHMARK(BM_EvolveNumeric);

void BM_ConcurrenceMixed(benchmark::State& state) {
  const DensityMatrix4 rho = werner_state(0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence_mixed(rho));
  }
}
BENCHMARK(BM_ConcurrenceMixed);

void BM_QuantumDiscord(benchmark::State& state) {
  const DensityMatrix4 rho = werner_state(0.6);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantum_discord(rho, grid));
  }
}
BENCHMARK(BM_QuantumDiscord)->Arg(32)->Arg(64)->Arg(128);

void BM_RadialAverage(benchmark::State& state) {
  SyntheticMapSpec spec;
  spec.grid = static_cast<int>(state.range(0));
  const PowerMap map = synthetic_gaussian_map(spec);
  const auto [cx, cy] = centroid(map);
  for (auto _ : state) {
    benchmark::DoNotOptimize(radial_average(map, cx, cy, spec.extent / 64.0));
  }
}
BENCHMARK(BM_RadialAverage)->Arg(64)->Arg(256);

void BM_FitGaussian(benchmark::State& state) {
  SyntheticMapSpec spec;
  spec.grid = 96;
  spec.noise = 0.01;
  const PowerMap map = synthetic_gaussian_map(spec);
  const auto [cx, cy] = centroid(map);
  const RadialProfile profile = radial_average(map, cx, cy, spec.extent / 64.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_gaussian(profile));
  }
}
BENCHMARK(BM_FitGaussian);

}  // namespace

BENCHMARK_MAIN();
