// Compares the OpenMP-parallel state census against its single-threaded
// reference on rings large enough for the fan-out to matter.  Both runs
// produce identical output by construction; the unit tests assert that, so
// this target only measures time.
#include <benchmark/benchmark.h>

#include "pbbs/oracle.hpp"

namespace {

void BM_census_parallel(benchmark::State& state) {
  const long long L = state.range(0);
  for (auto _ : state) {
    auto c = pbbs::oracle::census(L);
    benchmark::DoNotOptimize(c);
  }
}

void BM_census_serial(benchmark::State& state) {
  const long long L = state.range(0);
  for (auto _ : state) {
    auto c = pbbs::oracle::census_serial(L);
    benchmark::DoNotOptimize(c);
  }
}

}  // namespace

BENCHMARK(BM_census_parallel)->Arg(12)->Arg(14)->Arg(16)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census_serial)->Arg(12)->Arg(14)->Arg(16)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
