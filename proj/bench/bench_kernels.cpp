// Serial reference vs OpenMP kernels. Run with e.g. OMP_NUM_THREADS=8.
#include <benchmark/benchmark.h>

#include <vector>

#include "bvls/boolfn.hpp"
#include "bvls/kernels.hpp"
#include "bvls/spectral.hpp"

namespace {

std::vector<std::int32_t> signs_for(int n) {
    const bvls::BooleanFunction f = bvls::random_function(n, 42);
    std::vector<std::int32_t> data(f.size());
    bvls::kernels::sign_expand(f, data);
    return data;
}

void BM_FwhtSerial(benchmark::State& state) {
    const auto input = signs_for(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto data = input;
        bvls::kernels::fwht_serial(std::span<std::int32_t>(data));
        benchmark::DoNotOptimize(data.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input.size()));
}

void BM_FwhtParallel(benchmark::State& state) {
    const auto input = signs_for(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto data = input;
        bvls::kernels::fwht_parallel(std::span<std::int32_t>(data));
        benchmark::DoNotOptimize(data.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input.size()));
}

void BM_WalshTransform(benchmark::State& state) {
    const bvls::BooleanFunction f = bvls::random_function(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(bvls::walsh_transform(f));
}

void BM_DerivativeWeightsSerial(benchmark::State& state) {
    const bvls::BooleanFunction f = bvls::random_function(static_cast<int>(state.range(0)), 3);
    std::vector<std::uint64_t> out(f.size());
    for (auto _ : state) {
        bvls::kernels::derivative_weights_all_serial(f, out);
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_DerivativeWeightsPacked(benchmark::State& state) {
    const bvls::BooleanFunction f = bvls::random_function(static_cast<int>(state.range(0)), 3);
    std::vector<std::uint64_t> out(f.size());
    for (auto _ : state) {
        bvls::kernels::derivative_weights_all(f, out);
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_ProfileSpectral(benchmark::State& state) {
    const bvls::BooleanFunction f = bvls::random_function(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(bvls::differential_profile(f));
}

}  // namespace

BENCHMARK(BM_FwhtSerial)->DenseRange(12, 24, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FwhtParallel)->DenseRange(12, 24, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WalshTransform)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DerivativeWeightsSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DerivativeWeightsPacked)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProfileSpectral)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
