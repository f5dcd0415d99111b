#include <benchmark/benchmark.h>

#include <cmath>

#include "conetrace/coefficients.hpp"
#include "conetrace/hfun.hpp"
#include "conetrace/irrationality.hpp"
#include "conetrace/quadrature.hpp"

using namespace conetrace;

static void BM_HHatSeries(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(h_hat(2, 2.0, 0.3, 1e-12).value);
}
BENCHMARK(BM_HHatSeries);

static void BM_HHatDirect(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(h_hat(2, 2.0, 0.9, 1e-12).value);
}
BENCHMARK(BM_HHatDirect);

static void BM_HOracle(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(h_oracle(2, 2.0, 0.3, 1e-12).value);
}
BENCHMARK(BM_HOracle);

static void BM_GaussKronrod(benchmark::State& state) {
    auto f = [](double x) { return std::exp(-x) * std::cos(8.0 * x); };
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate(f, 0.0, 1.0, 1e-12).value);
}
BENCHMARK(BM_GaussKronrod);

static void BM_TanhSinhLogSingular(benchmark::State& state) {
    IntegrateOptions opts;
    opts.endpoint_singular = true;
    auto f = EndpointAwareIntegrand(
        [](double, double da, double) { return std::log(da); });
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate(f, 0.0, 1.0, 1e-12, opts).value);
}
BENCHMARK(BM_TanhSinhLogSingular);

static void BM_BigF(benchmark::State& state) {
    const double alpha = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(big_f(alpha, 1e-10).value);
}
BENCHMARK(BM_BigF)->Arg(2)->Arg(20)->Arg(65);

static void BM_TaylorV(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(v_j(21));
}
BENCHMARK(BM_TaylorV);

static void BM_Report41(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(report(41));
}
BENCHMARK(BM_Report41);

BENCHMARK_MAIN();
