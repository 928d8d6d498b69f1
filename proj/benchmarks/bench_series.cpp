#include <benchmark/benchmark.h>

#include "qpos/bounds.hpp"
#include "qpos/products.hpp"
#include "qpos/verifier.hpp"

namespace {

void BM_series_mul_dense(benchmark::State& state)
{
    const auto T = static_cast<std::size_t>(state.range(0));
    const auto p = qpos::partition_series(T);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpos::series_mul(p, p));
    }
}
BENCHMARK(BM_series_mul_dense)->Arg(500)->Arg(2000);

void BM_series_invert_euler(benchmark::State& state)
{
    const auto T = static_cast<std::size_t>(state.range(0));
    const auto e = qpos::euler_product(T);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpos::series_invert(e));
    }
}
BENCHMARK(BM_series_invert_euler)->Arg(2000)->Arg(10000);

void BM_gamma_series_largest(benchmark::State& state)
{
    const auto p = qpos::make_family(qpos::CoprimeTriple(1, 5, 7),
                                     qpos::ThetaForm(qpos::make_rational(2), qpos::make_rational(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpos::gamma_series(p, 1, 38780));
    }
}
BENCHMARK(BM_gamma_series_largest)->Unit(benchmark::kMillisecond);

void BM_compute_thresholds(benchmark::State& state)
{
    const auto p = qpos::make_family(qpos::CoprimeTriple(1, 4, 7),
                                     qpos::ThetaForm(qpos::make_rational(3, 2), qpos::make_rational(1, 2)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpos::compute_thresholds(p));
    }
}
BENCHMARK(BM_compute_thresholds);

} // namespace

BENCHMARK_MAIN();
