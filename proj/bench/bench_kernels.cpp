// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <string>

#include "toeplitz/kernels.hpp"
#include "toeplitz/lattice.hpp"
#include "toeplitz/oracle.hpp"

namespace {

const std::string kGen = "aabaaaaabaa";
constexpr toeplitz::Index kM = 12;

void BM_FixedPrefixSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(toeplitz::kernels::fixed_prefix_serial(kGen, kM, n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FixedPrefixParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(toeplitz::kernels::fixed_prefix_parallel(kGen, kM, n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SubsequenceSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(toeplitz::kernels::subsequence_serial(kGen, kM, 18, n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SubsequenceParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(toeplitz::kernels::subsequence_parallel(kGen, kM, 18, n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FirstMismatchSerial(benchmark::State& state) {
    const std::string a(static_cast<std::size_t>(state.range(0)), 'a');
    std::string b = a;
    b.back() = 'b';
    for (auto _ : state) benchmark::DoNotOptimize(toeplitz::kernels::first_mismatch_serial(a, b));
}

void BM_FirstMismatchParallel(benchmark::State& state) {
    const std::string a(static_cast<std::size_t>(state.range(0)), 'a');
    std::string b = a;
    b.back() = 'b';
    for (auto _ : state) benchmark::DoNotOptimize(toeplitz::kernels::first_mismatch_parallel(a, b));
}

void BM_Access(benchmark::State& state) {
    const toeplitz::ToeplitzSpec spec(kM, kGen);
    const toeplitz::Index n = 5ULL * 184884258895036416ULL;
    for (auto _ : state) benchmark::DoNotOptimize(toeplitz::access(spec, n));
}

void BM_Decide(benchmark::State& state) {
    const toeplitz::ToeplitzSpec spec(kM, kGen);
    for (auto _ : state) benchmark::DoNotOptimize(toeplitz::decide(spec, static_cast<toeplitz::Index>(state.range(0))));
}

void BM_Sweep(benchmark::State& state) {
    std::vector<toeplitz::ToeplitzSpec> specs;
    for (unsigned bits = 0; bits < 32; ++bits) {
        std::string w(5, 'a');
        for (int i = 0; i < 5; ++i) {
            if (bits >> i & 1) w[i] = 'b';
        }
        specs.emplace_back(6, w);
    }
    for (auto _ : state) benchmark::DoNotOptimize(toeplitz::sweep(specs, 216, 1296));
}

} // namespace

BENCHMARK(BM_FixedPrefixSerial)->RangeMultiplier(10)->Range(10000, 10000000);
BENCHMARK(BM_FixedPrefixParallel)->RangeMultiplier(10)->Range(10000, 10000000);
BENCHMARK(BM_SubsequenceSerial)->RangeMultiplier(10)->Range(10000, 1000000);
BENCHMARK(BM_SubsequenceParallel)->RangeMultiplier(10)->Range(10000, 1000000);
BENCHMARK(BM_FirstMismatchSerial)->Arg(10000000);
BENCHMARK(BM_FirstMismatchParallel)->Arg(10000000);
BENCHMARK(BM_Access);
BENCHMARK(BM_Decide)->Arg(3)->Arg(4)->Arg(18)->Arg(9);
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
