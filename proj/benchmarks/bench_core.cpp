#include "ssrbell/bell.hpp"
#include "ssrbell/entanglement.hpp"
#include "ssrbell/ssr.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ssrbell;

namespace {

DensityMatrix random_state(const SpaceHandle& space, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  const auto d = static_cast<Eigen::Index>(space->dimension());
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = {n(rng), n(rng)};
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix(space, hermitian_part(rho));
}

const SpaceHandle& space_for(std::int64_t which) {
  static const std::vector<SpaceHandle> spaces{single_particle_space(), yurke_state(true).handle(),
                                               pair_vacuum_superposition().handle()};
  return spaces.at(static_cast<std::size_t>(which));
}

void BM_Dephase(benchmark::State& state) {
  const auto rho = random_state(space_for(state.range(0)), 1);
  const DephasingMap map(rho.handle());
  for (auto _ : state) benchmark::DoNotOptimize(map.apply(rho.matrix()));
  state.SetLabel("dim " + std::to_string(rho.space().dimension()));
}
BENCHMARK(BM_Dephase)->DenseRange(0, 2);

void BM_Negativity(benchmark::State& state) {
  const auto rho = random_state(space_for(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(negativity(rho));
  state.SetLabel("dim " + std::to_string(rho.space().dimension()));
}
BENCHMARK(BM_Negativity)->DenseRange(0, 2);

void BM_MaximizeChsh(benchmark::State& state) {
  const auto rho = DensityMatrix::pure(yurke_state(true));
  const bool ssr = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(maximize_chsh(rho, ssr, 32, 3).value);
  state.SetLabel(ssr ? "yurke identical, ssr" : "yurke identical, free");
}
BENCHMARK(BM_MaximizeChsh)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PhaseTwirl(benchmark::State& state) {
  const auto rho = DensityMatrix::pure(yurke_state(true));
  for (auto _ : state) benchmark::DoNotOptimize(phase_twirl_sample(rho, 10000, 4));
}
BENCHMARK(BM_PhaseTwirl)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
