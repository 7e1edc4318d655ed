// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference drivers against their OpenMP counterparts, plus raw
// enumeration throughput.

#include <benchmark/benchmark.h>

#include <random>

#include "mustab/lowerbound.hpp"
#include "mustab/mus.hpp"
#include "mustab/sensitivity.hpp"
#include "mustab/verify.hpp"

#ifdef MUSTAB_HAVE_OPENMP
#include <omp.h>
#endif

using namespace mustab;

namespace {

Execution execution_of(const benchmark::State& state) {
    return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_RandomVerify(benchmark::State& state) {
    const std::vector<Suite> suites{Suite::kOracle, Suite::kBounds, Suite::kKeyLemma, Suite::kMarkerGap};
    const RandomPlan plan{2, 1, 200, 200, 42};
    for (auto _ : state) {
        auto reports = random_verify(plan, suites, {}, execution_of(state));
        benchmark::DoNotOptimize(reports);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(plan.samples));
}
BENCHMARK(BM_RandomVerify)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_ExhaustiveOracle(benchmark::State& state) {
    const std::vector<Suite> suites{Suite::kOracle};
    const ExhaustivePlan plan{2, 12, false};
    for (auto _ : state) {
        auto reports = exhaustive_verify(plan, suites, {}, execution_of(state));
        benchmark::DoNotOptimize(reports);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(exhaustive_text_count(plan)));
}
BENCHMARK(BM_ExhaustiveOracle)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_SensitivityScan(benchmark::State& state) {
    const auto inst = gen_lower(10);
    for (auto _ : state) {
        auto result = sensitivity_scan(inst.text, {}, execution_of(state));
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_SensitivityScan)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_ComputeMus(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::string bytes(n, '\0');
    std::mt19937_64 rng(1);
    for (auto& c : bytes) {
        c = static_cast<char>(rng());
    }
    const Text text(std::move(bytes));
    for (auto _ : state) {
        auto set = compute_mus(text);
        benchmark::DoNotOptimize(set);
    }
    state.SetBytesProcessed(state.iterations() * static_cast<long long>(n));
}
BENCHMARK(BM_ComputeMus)->RangeMultiplier(16)->Range(1 << 12, 1 << 24)->Unit(benchmark::kMillisecond);

void BM_BruteMus(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto text = random_text({4, n, n, 1, 3}, 0);
    for (auto _ : state) {
        auto set = brute_mus(text);
        benchmark::DoNotOptimize(set);
    }
}
BENCHMARK(BM_BruteMus)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
#ifdef MUSTAB_HAVE_OPENMP
    benchmark::AddCustomContext("omp_max_threads", std::to_string(omp_get_max_threads()));
#endif
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
        return 1;
    }
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
