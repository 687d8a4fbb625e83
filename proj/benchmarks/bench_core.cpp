#include <benchmark/benchmark.h>

#include "galois/combinat.hpp"
#include "galois/dist.hpp"
#include "galois/qpoly.hpp"
#include "galois/sampler.hpp"

namespace {

void BM_GaloisPoly(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const unsigned m = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(galois::qpoly::galois_poly(n, m));
  }
}
BENCHMARK(BM_GaloisPoly)->Args({16, 2})->Args({32, 2})->Args({64, 2})->Args({64, 10});

void BM_QBinomial(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(galois::qpoly::q_binomial(n, n / 2));
  }
}
BENCHMARK(BM_QBinomial)->Arg(32)->Arg(64)->Arg(128);

void BM_Inversions(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  galois::sampler::SampleStream s(1, 0);
  const auto w = galois::sampler::sample_word(n, m, s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(galois::combinat::inversions(w));
  }
}
BENCHMARK(BM_Inversions)->Args({1000, 2})->Args({1000, 64})->Args({100000, 64});

void BM_InversionsNaive(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  galois::sampler::SampleStream s(1, 0);
  const auto w = galois::sampler::sample_word(n, 8, s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(galois::combinat::inversions_naive(w));
  }
}
BENCHMARK(BM_InversionsNaive)->Arg(1000);

void BM_LltResidual(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(galois::dist::llt_residual(n, 2));
  }
}
BENCHMARK(BM_LltResidual)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
