#include <benchmark/benchmark.h>

#include <vector>

#include "vsheet/field.hpp"
#include "vsheet/front.hpp"
#include "vsheet/quadrature.hpp"
#include "vsheet/symbol.hpp"

namespace {

const vsheet::MediumParams kMedium = vsheet::MediumParams::symmetric(1.0, 2.0);

void BM_Sigma(benchmark::State& state) {
  vsheet::Frequency f{1.0, 0.3, 0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(vsheet::sigma(f, kMedium));
    f.delta += 1e-9;
  }
}
BENCHMARK(BM_Sigma);

void BM_MuPair(benchmark::State& state) {
  vsheet::Frequency f{1.0, 0.3, 0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(vsheet::mu_pair(f, kMedium));
    f.delta += 1e-9;
  }
}
BENCHMARK(BM_MuPair);

void BM_ExpIntegral(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<vsheet::Complex> f(n);
  const double h = 10.0 / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) f[k] = std::exp(-h * static_cast<double>(k));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vsheet::exp_integral(f, h, {1.3, 0.4}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpIntegral)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_SolveFront(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  vsheet::BumpSpec bump;
  bump.y_plus = 0.0;
  bump.y_minus = 0.0;
  const auto field = vsheet::bump_field({n, n, 65, 8.0, 8.0, 1.0}, bump);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vsheet::solve_front(field, kMedium, 2.0));
  }
}
BENCHMARK(BM_SolveFront)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_EstimateConstants(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(vsheet::estimate_constants(kMedium, 128, 512));
  }
}
BENCHMARK(BM_EstimateConstants)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
