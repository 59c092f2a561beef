#include <benchmark/benchmark.h>

#include "freeprob/ncpart.hpp"
#include "freeprob/rand.hpp"
#include "freeprob/subord.hpp"

namespace {

using namespace freeprob;

void bm_enumerate_nc(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_nc(n));
}
BENCHMARK(bm_enumerate_nc)->DenseRange(6, 12, 2);

void bm_boxright(benchmark::State& state) {
    const int k = 2;
    const int order = static_cast<int>(state.range(0));
    RandomDistributions gen(7);
    Distribution mu = gen.random_distribution(k, order);
    Distribution nu = gen.random_distribution(k, order);
    for (auto _ : state) benchmark::DoNotOptimize(boxright(mu, nu));
}
BENCHMARK(bm_boxright)->DenseRange(3, 6, 1);

void bm_boxright_moments_oracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RandomDistributions gen(7);
    Distribution mu = gen.random_distribution(1, n);
    Distribution nu = gen.random_distribution(1, n);
    Word w(static_cast<std::size_t>(n), 1);
    for (auto _ : state) benchmark::DoNotOptimize(boxright_moments(mu, nu, w));
}
BENCHMARK(bm_boxright_moments_oracle)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
