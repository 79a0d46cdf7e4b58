#include <benchmark/benchmark.h>

#include "k3/hilbert.hpp"
#include "k3/qseries.hpp"

namespace {

void BM_Molien(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k3::molien_series(N));
}
BENCHMARK(BM_Molien)->Arg(24)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k3::invariant_dimension_oracle(d));
}
BENCHMARK(BM_Oracle)->Arg(12)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_BorcherdsInput(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k3::borcherds_input(N));
}
BENCHMARK(BM_BorcherdsInput)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
