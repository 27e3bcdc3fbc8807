#include <benchmark/benchmark.h>

#include <random>

#include "maxgal/arith/factor.hpp"
#include "maxgal/arith/primes.hpp"
#include "maxgal/arith/resultant.hpp"

using namespace maxgal;

static void BM_PrimeSieve(benchmark::State& state) {
    const auto bound = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t count = 0;
        for_each_prime(2, bound, [&](std::uint64_t) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_PrimeSieve)->Arg(100000)->Arg(1000000)->Arg(10000000)->Unit(benchmark::kMillisecond);

static FpPoly random_monic(const Integer& p, int degree, std::mt19937_64& rng) {
    std::vector<Integer> c;
    for (int i = 0; i < degree; ++i) c.push_back(from_u64(rng()) % p);
    c.emplace_back(1);
    return FpPoly(p, c);
}

static void BM_FpFactor(benchmark::State& state) {
    const Integer p = static_cast<long>(state.range(0));
    const int degree = static_cast<int>(state.range(1));
    std::mt19937_64 rng(7);
    std::vector<FpPoly> inputs;
    for (int i = 0; i < 16; ++i) inputs.push_back(random_monic(p, degree, rng));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(fp_factor(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_FpFactor)->Args({29, 14})->Args({1000003, 14})->Args({1000003, 30})->Unit(benchmark::kMicrosecond);

static void BM_PollardRho(benchmark::State& state) {
    // product of two primes near 10^9
    const Integer n = next_prime(Integer(1000000000)) * next_prime(Integer(2000000000));
    for (auto _ : state) benchmark::DoNotOptimize(pollard_factor(n));
}
BENCHMARK(BM_PollardRho)->Unit(benchmark::kMillisecond);

static void BM_Resultant(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    std::mt19937_64 rng(11);
    std::vector<Integer> c;
    for (int i = 0; i < degree; ++i) c.push_back((from_u64(rng()) << 32) + from_u64(rng()));
    c.emplace_back(1);
    const ZPoly f(c);
    for (auto _ : state) benchmark::DoNotOptimize(derivative_resultant(f));
}
BENCHMARK(BM_Resultant)->Arg(14)->Arg(22)->Arg(30)->Unit(benchmark::kMillisecond);
