#include <benchmark/benchmark.h>

#include <vector>

#include "powmean/cauchy.hpp"
#include "powmean/estimators.hpp"
#include "powmean/mixture.hpp"
#include "powmean/montecarlo.hpp"
#include "powmean/quadrature.hpp"

using namespace powmean;

namespace {

std::vector<double> cauchy_data(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> xs(n);
  const ComplexParam gamma(0, 1);
  for (double& x : xs) x = cauchy_draw(gamma, rng);
  return xs;
}

void BM_SampleCauchy(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  SplitMix64 rng(42u);
  std::vector<double> buf(n);
  const ComplexParam gamma(0, 1);
  for (auto _ : state) {
    for (double& x : buf) x = cauchy_draw(gamma, rng);
    benchmark::DoNotOptimize(buf.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_SampleCauchy)->Arg(1000)->Arg(100000);

void BM_QuasiArithmeticMean(benchmark::State& state) {
  const auto xs = cauchy_data(static_cast<std::size_t>(state.range(0)), 7u);
  const double p = state.range(1) == 0 ? -1.0 : -0.25;
  const GeneratorSpec g(p, {0.0, 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(quasi_arithmetic_mean(g, xs).estimate);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_QuasiArithmeticMean)
    ->Args({1000, 0})
    ->Args({100000, 0})
    ->Args({1000, 1})
    ->Args({100000, 1});

void BM_SumsOfProducts(benchmark::State& state) {
  const auto xs = cauchy_data(static_cast<std::size_t>(state.range(0)), 11u);
  const std::size_t m = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sums_of_products(m, {0.0, 1.0}, xs).estimate);
  }
}
BENCHMARK(BM_SumsOfProducts)->Args({50, 2})->Args({200, 3})->Args({1000, 5});

void BM_EstimateMixture(benchmark::State& state) {
  SplitMix64 rng(13u);
  const MixtureParams params(0.5, ComplexParam(0, 1), ComplexParam(20, 2));
  const Sample s =
      sample_mixture(params, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_mixture(s, 0.1).t_hat);
  }
}
BENCHMARK(BM_EstimateMixture)->Arg(1000)->Arg(10000);

void BM_MleFixedPoint(benchmark::State& state) {
  const auto xs = cauchy_data(static_cast<std::size_t>(state.range(0)), 17u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mle_fixed_point(std::span<const double>(xs))
                                 .gamma_hat);
  }
}
BENCHMARK(BM_MleFixedPoint)->Arg(20)->Arg(100)->Arg(1000);

void BM_VarianceQuadrature(benchmark::State& state) {
  const double p = -0.25;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        asymptotic_variance_quadrature(p, {0.0, 1.0}, ComplexParam(0, 1)));
  }
}
BENCHMARK(BM_VarianceQuadrature);

void BM_RunTrials(benchmark::State& state) {
  const TrialConfig cfg{
      99u, 200, static_cast<std::size_t>(state.range(0)),
      QamScenario{ComplexParam(0, 1), GeneratorSpec(-1.0, {0.0, 1.0})}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trials(cfg, 1).variance);
  }
}
BENCHMARK(BM_RunTrials)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
