#include <benchmark/benchmark.h>

#include "maxgal/arith/factor.hpp"
#include "maxgal/arith/primes.hpp"
#include "maxgal/construct.hpp"
#include "maxgal/goldbach.hpp"

using namespace maxgal;

// Multiplicity scan of the genus-6 polynomial over all odd primes below the bound.
static void BM_MultiplicityScan(benchmark::State& state) {
    const auto [f0, N] = assemble(fixture_witnesses(), 6);
    const auto bound = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        int worst = 0;
        for_each_prime(3, bound, [&](std::uint64_t p) { worst = std::max(worst, max_root_multiplicity(f0, p)); });
        benchmark::DoNotOptimize(worst);
    }
}
BENCHMARK(BM_MultiplicityScan)->Arg(10000)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_VerifyRange(benchmark::State& state) {
    const auto bound = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_range(bound));
}
BENCHMARK(BM_VerifyRange)->Arg(200000)->Arg(2000000)->Unit(benchmark::kMillisecond);

static void BM_FixtureAssembly(benchmark::State& state) {
    const auto witnesses = fixture_witnesses();
    for (auto _ : state) benchmark::DoNotOptimize(assemble(witnesses, 6));
}
BENCHMARK(BM_FixtureAssembly)->Unit(benchmark::kMicrosecond);

static void BM_BuildCertificate(benchmark::State& state) {
    BuildOptions opts;
    opts.scan_bound = 10000;
    opts.rho_budget = 20000;
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_certificate(g, opts));
}
BENCHMARK(BM_BuildCertificate)->Arg(8)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
