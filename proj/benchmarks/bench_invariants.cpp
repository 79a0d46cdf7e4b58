#include <benchmark/benchmark.h>

#include "k3/defaults.hpp"
#include "k3/invariants.hpp"
#include "k3/modarith.hpp"
#include "k3/random.hpp"
#include "k3/weierstrass.hpp"

namespace {

k3::SurfaceParams sample(std::uint64_t stream) {
  k3::Rng rng(k3::kVerificationDefaults.seed, stream);
  return k3::random_surface(rng, k3::kVerificationDefaults.entry_bound);
}

void BM_R96(benchmark::State& state) {
  const auto u = sample(1);
  for (auto _ : state) benchmark::DoNotOptimize(k3::r96(u));
}
BENCHMARK(BM_R96)->Unit(benchmark::kMicrosecond);

void BM_K552Integer(benchmark::State& state) {
  const auto u = sample(2);
  for (auto _ : state) benchmark::DoNotOptimize(k3::k552(u));
}
BENCHMARK(BM_K552Integer)->Unit(benchmark::kMillisecond);

void BM_K552ModP(benchmark::State& state) {
  const auto u = sample(3).reduce_mod(k3::modarith::kDefaultPrime);
  for (auto _ : state) benchmark::DoNotOptimize(k3::k552(u));
}
BENCHMARK(BM_K552ModP)->Unit(benchmark::kMillisecond);

void BM_FiberProfile(benchmark::State& state) {
  const auto u = sample(4);
  for (auto _ : state) benchmark::DoNotOptimize(k3::fiber_profile(u));
}
BENCHMARK(BM_FiberProfile)->Unit(benchmark::kMillisecond);

void BM_SliceDivisibility(benchmark::State& state) {
  const auto u0 = sample(5);
  const auto u1 = sample(6);
  for (auto _ : state) benchmark::DoNotOptimize(k3::slice_divisibility(u0, u1));
}
BENCHMARK(BM_SliceDivisibility)->Unit(benchmark::kMillisecond);

void BM_SliceDivisibilityModP(benchmark::State& state) {
  const auto u0 = sample(5);
  const auto u1 = sample(6);
  for (auto _ : state) benchmark::DoNotOptimize(k3::slice_divisibility(u0, u1, 1000003));
}
BENCHMARK(BM_SliceDivisibilityModP)->Unit(benchmark::kMillisecond);

}  // namespace
