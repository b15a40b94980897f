// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <vector>

#include "qpi/bounds.hpp"
#include "qpi/gamma.hpp"
#include "qpi/scheme.hpp"
#include "qpi/scheme_approx.hpp"

namespace {

using namespace qpi;

Scheme make_scheme(std::size_t n, std::size_t t, std::size_t h) {
  SchemeParams p;
  p.n = n;
  p.t = t;
  p.h = h;
  return Scheme(p);
}

void BM_Syndrome(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SyndromeMatrix m{BlockPartition(n, 8)};
  std::mt19937_64 rng(1);
  const auto v = random_sign_vector(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(syndrome(m, v));
}
BENCHMARK(BM_Syndrome)->RangeMultiplier(4)->Range(64, 4096);

void BM_SolveSyndrome(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SyndromeMatrix m{BlockPartition(n, 8)};
  std::mt19937_64 rng(2);
  const auto q = random_sign_vector(n - 8, rng);
  for (auto _ : state) benchmark::DoNotOptimize(solve_syndrome(m, q));
}
BENCHMARK(BM_SolveSyndrome)->RangeMultiplier(4)->Range(64, 4096);

void BM_Session(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = make_scheme(n, 8, n / 8);
  auto rng = data_rng(3);
  const auto w = random_sign_vector(n, rng);
  const auto x = random_data_vector(n, 1.0, rng);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_session(s, w, x, ++seed, SessionMode::kProduction));
}
BENCHMARK(BM_Session)->RangeMultiplier(4)->Range(64, 4096);

void BM_CountGamma(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GammaSpec spec{n, 8, n / 4};
  for (auto _ : state) benchmark::DoNotOptimize(count_gamma(spec));
}
BENCHMARK(BM_CountGamma)->RangeMultiplier(4)->Range(64, 4096);

void BM_GammaSamplerBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GammaSpec spec{n, 8, n / 4};
  for (auto _ : state) benchmark::DoNotOptimize(GammaSampler(spec).member_count());
}
BENCHMARK(BM_GammaSamplerBuild)->RangeMultiplier(4)->Range(64, 1024);

void BM_GammaSample(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GammaSampler sampler(GammaSpec{n, 8, n / 4});
  std::mt19937_64 rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(rng));
}
BENCHMARK(BM_GammaSample)->RangeMultiplier(4)->Range(64, 1024);

void BM_GammaRejection(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GammaSpec spec{n, 8, n / 16};
  std::mt19937_64 rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(sample_gamma_rejection(spec, rng));
}
BENCHMARK(BM_GammaRejection)->RangeMultiplier(4)->Range(64, 1024);

}  // namespace

BENCHMARK_MAIN();
