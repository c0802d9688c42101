// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks over the same seeded inputs the harness uses.
// Arguments: n, density in percent.
#include <benchmark/benchmark.h>

#include "octobench/generator.hpp"
#include "octobench/octagon.hpp"
#include "octobench/rng.hpp"

using namespace octobench;

namespace {

struct Input {
    Octagon closed;
    Constraint tightening;
    Octagon other;
};

Input make_input(const benchmark::State& state) {
    GeneratorParams p;
    p.n = static_cast<std::size_t>(state.range(0));
    p.density = static_cast<double>(state.range(1)) / 100.0;
    p.seed = 42;
    const auto g = generate_octagon(p);
    Rng rng{mix64(p.seed + 1)};
    Input in{close_full(g.state), Constraint::upper(0, 0), Octagon::top(p.n)};
    in.tightening = sample_tightening_constraint(in.closed, rng, g.witness);
    p.seed = mix64(p.seed + 2);
    in.other = close_full(generate_octagon(p).state);
    return in;
}

void grid(benchmark::internal::Benchmark* b) {
    for (const long n : {25, 50, 100}) {
        for (const long d : {10, 50, 90}) {
            b->Args({n, d});
        }
    }
    b->Unit(benchmark::kMicrosecond);
}

void BM_CloseFull(benchmark::State& state) {
    const Input in = make_input(state);
    const Octagon open = add_constraint(in.closed, in.tightening);
    for (auto _ : state) {
        benchmark::DoNotOptimize(close_full(open));
    }
}

void BM_IncMine(benchmark::State& state) {
    const Input in = make_input(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(close_incremental_mine(in.closed, in.tightening));
    }
}

void BM_IncChawdhary(benchmark::State& state) {
    const Input in = make_input(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(close_incremental_chawdhary(in.closed, in.tightening));
    }
}

void BM_Join(benchmark::State& state) {
    const Input in = make_input(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(join(in.closed, in.other));
    }
}

void BM_Widen(benchmark::State& state) {
    const Input in = make_input(state);
    const Octagon next = join(in.closed, in.other);
    for (auto _ : state) {
        benchmark::DoNotOptimize(widen(in.closed, next));
    }
}

void BM_Forget(benchmark::State& state) {
    const Input in = make_input(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(forget(in.closed, 0));
    }
}

} // namespace

BENCHMARK(BM_CloseFull)->Apply(grid);
BENCHMARK(BM_IncMine)->Apply(grid);
BENCHMARK(BM_IncChawdhary)->Apply(grid);
BENCHMARK(BM_Join)->Apply(grid);
BENCHMARK(BM_Widen)->Apply(grid);
BENCHMARK(BM_Forget)->Apply(grid);

BENCHMARK_MAIN();
