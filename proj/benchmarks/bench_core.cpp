// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/examples.hpp"
#include "rankgauge/measures.hpp"
#include "rankgauge/objective.hpp"

#include <benchmark/benchmark.h>

using namespace rankgauge;
namespace ex = rankgauge::examples;

namespace {

// args: d1, d2, d3 of the maximal CES, rank budget
void BM_LossAndGradient(benchmark::State &state) {
    const int  r   = static_cast<int>(state.range(3));
    const auto sub = ex::max_ces_subspace(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                                          static_cast<int>(state.range(2)));
    LossFunction f(sub, r);
    const auto   p = random_init(sub.dims(), r, {1, 1.0});
    RVector      g;
    for(auto _ : state) benchmark::DoNotOptimize(f.value_and_gradient(p.x(), g));
    state.counters["params"] = static_cast<double>(p.x().size());
}
BENCHMARK(BM_LossAndGradient)->Args({2, 2, 2, 1})->Args({2, 3, 4, 1})->Args({3, 3, 6, 1})->Args({4, 5, 10, 1})->Args({4, 4, 4, 6});

void BM_LossOnly(benchmark::State &state) {
    const auto   sub = ex::max_ces_subspace(3, 3, 6);
    LossFunction f(sub, 1);
    const auto   p = random_init(sub.dims(), 1, {1, 1.0});
    for(auto _ : state) benchmark::DoNotOptimize(f.value(p.x()));
}
BENCHMARK(BM_LossOnly);

void BM_SingleTrial(benchmark::State &state) {
    const auto  sub = ex::max_ces_subspace(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                                           static_cast<int>(state.range(2)));
    const auto  projector = std::make_shared<const ComplementProjector>(sub);
    OptimConfig cfg;
    for(auto _ : state) benchmark::DoNotOptimize(minimize_trial(projector, 1, 7, cfg).value);
}
BENCHMARK(BM_SingleTrial)->Args({2, 2, 4})->Args({3, 3, 6})->Args({4, 5, 10})->Unit(benchmark::kMillisecond);

void BM_Certification(benchmark::State &state) {
    const auto sub = ex::strip_subspace({});
    for(auto _ : state) benchmark::DoNotOptimize(er_subspace(sub, 2, {}));
}
BENCHMARK(BM_Certification)->Unit(benchmark::kMicrosecond);

void BM_MatrixMultScan(benchmark::State &state) {
    const auto psi = ex::matrix_mult_tensor(2);
    for(auto _ : state) benchmark::DoNotOptimize(er_pure(psi, 7, {}));
}
BENCHMARK(BM_MatrixMultScan)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
