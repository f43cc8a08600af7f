#include <benchmark/benchmark.h>

#include <intdiff/intdiff.hpp>

#include "generators.hpp"

using namespace intdiff;

namespace {

void bm_multiply(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    testing::Rng rng(1);
    testing::ElementBounds bounds;
    bounds.terms = 6;
    const auto a = testing::random_element(rng, n, bounds), b = testing::random_element(rng, n, bounds);
    for (auto _ : state)
        benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(bm_multiply)->DenseRange(1, 3);

void bm_apply_aut(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    testing::Rng rng(2);
    const auto sigma = testing::random_automorphism(rng, n, 3, 3);
    const auto a = testing::random_element(rng, n, {});
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_aut(sigma, a));
}
BENCHMARK(bm_apply_aut)->DenseRange(1, 3);

void bm_recognize(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    testing::Rng rng(3);
    const auto images = images_of(testing::random_automorphism(rng, n, 2, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(recognize(images));
}
BENCHMARK(bm_recognize)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void bm_enumerate_ideals(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const bool parallel = state.range(1) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(count_ideals(n, parallel));
}
BENCHMARK(bm_enumerate_ideals)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void bm_stabilizer(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = prime(Subset{1}, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(stabilizer(a));
}
BENCHMARK(bm_stabilizer)->DenseRange(3, 7);

}  // namespace

BENCHMARK_MAIN();
