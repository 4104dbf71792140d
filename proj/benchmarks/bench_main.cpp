#include <benchmark/benchmark.h>

#include "kgscatter/coefficients.hpp"
#include "kgscatter/ode_oracle.hpp"
#include "kgscatter/special_functions.hpp"
#include "kgscatter/wavefunctions.hpp"

namespace {

using kgscatter::Complex;

void BM_LambertW0(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kgscatter::lambert_w0(x));
    x = x < 1e6 ? x * 1.7 : 0.1;
  }
}
BENCHMARK(BM_LambertW0);

void BM_LogGamma(benchmark::State& state) {
  const Complex z(0.5, 2.95);
  for (auto _ : state) benchmark::DoNotOptimize(kgscatter::log_gamma(z));
}
BENCHMARK(BM_LogGamma);

void BM_Gauss2F1(benchmark::State& state) {
  const Complex a(0.5, 2.0), b(0.5, -1.0), c(1.0, 4.0);
  const Complex z(state.range(0) == 0 ? -0.5 : -20.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(kgscatter::gauss_2f1(a, b, c, z));
}
BENCHMARK(BM_Gauss2F1)->Arg(0)->Arg(1);

void BM_HeunC(benchmark::State& state) {
  const auto p = kgscatter::lambertw_heun_params(5.0, 1.0, 3.0, 0.15);
  for (auto _ : state) benchmark::DoNotOptimize(kgscatter::heun_c(p, Complex(-0.6, 0.0)));
}
BENCHMARK(BM_HeunC);

void BM_HeunCContinued(benchmark::State& state) {
  const auto p = kgscatter::lambertw_heun_params(5.0, 1.0, 3.0, 0.15);
  for (auto _ : state) benchmark::DoNotOptimize(kgscatter::heun_c_continued(p, -50.0));
}
BENCHMARK(BM_HeunCContinued);

void BM_TanhRT(benchmark::State& state) {
  double E = 1.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kgscatter::tanh_rt(E, 1.0, 3.0, 0.5));
    E = E < 6.0 ? E + 0.01 : 1.05;
    if (E > 1.99 && E < 4.01) E = 4.05;
  }
}
BENCHMARK(BM_TanhRT);

void BM_IntegrateRT(benchmark::State& state) {
  kgscatter::ScatteringConfig cfg;
  cfg.E = 5.0;
  cfg.barrier = static_cast<kgscatter::Barrier>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kgscatter::integrate_rt(cfg, 1e-8));
}
BENCHMARK(BM_IntegrateRT)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
