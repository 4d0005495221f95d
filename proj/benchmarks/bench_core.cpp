#include <benchmark/benchmark.h>

#include "pangular/bounds.hpp"
#include "pangular/distance.hpp"
#include "pangular/probe.hpp"
#include "pangular/verify.hpp"

using namespace pangular;

namespace {

SampleConfig bench_cfg(const SpaceSpec& sp) {
  SampleConfig cfg;
  cfg.space = sp;
  cfg.n_samples = 1 << 20;
  cfg.seed = 99;
  return cfg;
}

void BM_norm(benchmark::State& state) {
  auto sp = SpaceSpec::lp(1.5, static_cast<int>(state.range(0)));
  SampleConfig cfg = bench_cfg(sp);
  auto [x, y] = sample_pair(cfg, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(norm(sp, x));
  }
}
BENCHMARK(BM_norm)->Arg(2)->Arg(4)->Arg(16);

void BM_alpha_p(benchmark::State& state) {
  auto sp = SpaceSpec::euclidean(3);
  SampleConfig cfg = bench_cfg(sp);
  auto [x, y] = sample_pair(cfg, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha_p(sp, x, y, 2.5));
  }
}
BENCHMARK(BM_alpha_p);

void BM_chain(benchmark::State& state) {
  NormTriple t = validate_triple(1, 4, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chain_values(2.0, t, 15.906));
  }
}
BENCHMARK(BM_chain);

void BM_sample_pair(benchmark::State& state) {
  SampleConfig cfg = bench_cfg(SpaceSpec::linf(3));
  int i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_pair(cfg, i++ & 0xfffff));
  }
}
BENCHMARK(BM_sample_pair);

void BM_violation_margin(benchmark::State& state) {
  auto sp = SpaceSpec::euclidean(3);
  SampleConfig cfg = bench_cfg(sp);
  auto [x, y] = sample_pair(cfg, 2);
  DistanceParams params;
  params.p = 2.0;
  params.q = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(violation_margin(BoundId::HILE3, params, sp, x, y));
  }
}
BENCHMARK(BM_violation_margin);

}  // namespace

BENCHMARK_MAIN();
