// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "paforge/pam.hpp"
#include "paforge/sfp.hpp"

using namespace paforge;

namespace {

const SfpQuery kQuery{19, Variant::kLengthQ, 2, 2, 0, 0};

void BM_SfpOracle(benchmark::State& state) {
  const Field f(13, 1);
  const SfpQuery query{13, Variant::kLengthQ, 1, 2, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(sfp_enumerate_oracle(f, query).count);
}

void BM_SfpFast(benchmark::State& state) {
  const Field f(19, 1);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sfp_enumerate_fast(f, kQuery, threads).count);
}

void BM_SfpFastSmall(benchmark::State& state) {
  const Field f(13, 1);
  const SfpQuery query{13, Variant::kLengthQ, 1, 2, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(sfp_enumerate_fast(f, query, 1).count);
}

void BM_VerifyReference(benchmark::State& state) {
  const PermArray pa = build_pa(Field(19, 1), kQuery);
  for (auto _ : state)
    benchmark::DoNotOptimize(min_distance_reference(pa.rows(), pa.claimed_distance(), {}).min_observed);
}

void BM_VerifyParallel(benchmark::State& state) {
  const PermArray pa = build_pa(Field(19, 1), kQuery);
  VerifyOptions opt;
  opt.threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(min_distance(pa.rows(), pa.claimed_distance(), opt).min_observed);
}

void thread_args(benchmark::internal::Benchmark* b) {
  const int max = omp_get_max_threads();
  for (int t = 1; t < max; t *= 2) b->Arg(t);
  b->Arg(max);
}

}  // namespace

BENCHMARK(BM_SfpOracle)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SfpFastSmall)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SfpFast)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
