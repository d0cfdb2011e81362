#include <benchmark/benchmark.h>

#include "plat/canonical.hpp"
#include "plat/census.hpp"
#include "plat/knotcodes.hpp"
#include "plat/spheres.hpp"

namespace {

plat::PlatGrid qualifying_grid(std::uint64_t seed) {
  plat::CensusSpec spec{3, 14, {-5, -4, -3, 3, 4, 5}, 3, seed};
  return plat::sample(spec, 1).front();
}

void BM_Canonicalize(benchmark::State& state) {
  const auto grid = qualifying_grid(1);
  for (auto _ : state) benchmark::DoNotOptimize(plat::canonicalize(grid));
}
BENCHMARK(BM_Canonicalize);

void BM_GoeritzDeterminant(benchmark::State& state) {
  const auto grid = qualifying_grid(2);
  for (auto _ : state) benchmark::DoNotOptimize(plat::goeritz_determinant(grid));
}
BENCHMARK(BM_GoeritzDeterminant)->Unit(benchmark::kMillisecond);

void BM_Fingerprint(benchmark::State& state) {
  const auto grid = qualifying_grid(3);
  for (auto _ : state) benchmark::DoNotOptimize(plat::fingerprint(grid));
}
BENCHMARK(BM_Fingerprint)->Unit(benchmark::kMillisecond);

void BM_CountOrbits(benchmark::State& state) {
  plat::CensusSpec spec{5, static_cast<int>(state.range(0)), {-4, -3, 3, 4}, 3, 0};
  for (auto _ : state) benchmark::DoNotOptimize(plat::count_orbits(spec));
}
BENCHMARK(BM_CountOrbits)->Arg(10)->Arg(100);

void BM_CountVerticalSpheres(benchmark::State& state) {
  const auto grid = plat::PlatGrid::filled(5, static_cast<int>(state.range(0)), -3);
  for (auto _ : state) benchmark::DoNotOptimize(plat::count_vertical_spheres(grid));
}
BENCHMARK(BM_CountVerticalSpheres)->Arg(14)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
