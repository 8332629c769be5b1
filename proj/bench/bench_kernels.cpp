// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "exclt/directing.hpp"
#include "exclt/kernels.hpp"

namespace {

using namespace exclt;

DirectingLaw cauchy_mixture() {
  DirectingLaw law;
  law.base = family::Cauchy{0.0, 1.0};
  law.randomizer = ScalePrior{PositivePrior::from_atoms({{1.0, 0.5}, {2.0, 0.5}}), false};
  return law;
}

void BM_ArraySumsSerial(benchmark::State& state) {
  const auto law = cauchy_mixture();
  const NormingSequence norming(1.0);
  for (auto _ : state) {
    auto v = kernels::serial::array_sums(law, norming, state.range(0), 2, 256, 7);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 2 * 256);
}

void BM_ArraySumsOmp(benchmark::State& state) {
  const auto law = cauchy_mixture();
  const NormingSequence norming(1.0);
  for (auto _ : state) {
    auto v = kernels::omp::array_sums(law, norming, state.range(0), 2, 256, 7, 0);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 2 * 256);
}

std::vector<double> samples(std::size_t n) {
  Rng rng(11);
  std::vector<double> x(n);
  for (double& v : x) v = standard_normal(rng);
  return x;
}

std::vector<double> t_grid() {
  std::vector<double> t;
  for (int k = -20; k <= 20; ++k) t.push_back(0.25 * k);
  return t;
}

void BM_EmpiricalCfSerial(benchmark::State& state) {
  const auto x = samples(static_cast<std::size_t>(state.range(0)));
  const auto t = t_grid();
  for (auto _ : state) {
    auto cf = kernels::serial::empirical_cf(x, t);
    benchmark::DoNotOptimize(cf.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<long>(t.size()));
}

void BM_EmpiricalCfOmp(benchmark::State& state) {
  const auto x = samples(static_cast<std::size_t>(state.range(0)));
  const auto t = t_grid();
  for (auto _ : state) {
    auto cf = kernels::omp::empirical_cf(x, t, 0);
    benchmark::DoNotOptimize(cf.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<long>(t.size()));
}

}  // namespace

BENCHMARK(BM_ArraySumsSerial)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArraySumsOmp)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EmpiricalCfSerial)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EmpiricalCfOmp)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
