// Microbenchmarks for the hot path: transform round trips, symbol application,
// full right-hand sides, and whole integrator steps across grid sizes.
#include <benchmark/benchmark.h>

#include <cmath>

#include "bolab/equation.hpp"
#include "bolab/integrator.hpp"
#include "bolab/multiplier.hpp"

using namespace bolab;

namespace {

Field test_field(const TorusGrid& g) {
    return Field::sampled(g, [&](double x) {
        const double r = 2.0 * M_PI * x / g.length();
        return std::exp(-x * x * 0.01) + 0.3 * std::sin(3.0 * r);
    });
}

void bm_transform_round_trip(benchmark::State& state) {
    TorusGrid g(static_cast<int>(state.range(0)), 100.0);
    Field u = test_field(g);
    u.spectrum(); // warm the plan cache
    for (auto _ : state) {
        // derivative of order 0 forces forward + inverse transforms
        Field v = derivative(u, 0);
        benchmark::DoNotOptimize(v.samples().data());
        u = std::move(v);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_hilbert(benchmark::State& state) {
    TorusGrid g(static_cast<int>(state.range(0)), 100.0);
    Field u = test_field(g);
    u.spectrum();
    for (auto _ : state) {
        Field v = hilbert(u);
        benchmark::DoNotOptimize(v.samples().data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_rhs_quadratic_hilbert(benchmark::State& state) {
    TorusGrid g(static_cast<int>(state.range(0)), 100.0);
    SimState s{test_field(g), 0.0};
    auto spec = EquationSpec::bo();
    rhs(spec, s); // warm
    for (auto _ : state) {
        Field v = rhs(spec, s);
        benchmark::DoNotOptimize(v.samples().data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_rhs_depth_family(benchmark::State& state) {
    TorusGrid g(static_cast<int>(state.range(0)), 100.0);
    SimState s{test_field(g), 0.0};
    auto spec = EquationSpec::ilw(1.0);
    rhs(spec, s);
    for (auto _ : state) {
        Field v = rhs(spec, s);
        benchmark::DoNotOptimize(v.samples().data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_integrator_step(benchmark::State& state) {
    TorusGrid g(static_cast<int>(state.range(0)), 100.0);
    auto spec = EquationSpec::bo();
    SimState s{test_field(g), 0.0};
    s = ifrk4_step(s, 1e-4, spec); // warm plans and caches
    for (auto _ : state) {
        SimState next = ifrk4_step(s, 1e-4, spec);
        benchmark::DoNotOptimize(next.u.samples().data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(bm_transform_round_trip)->Arg(256)->Arg(1024)->Arg(4096)->Arg(16384);
BENCHMARK(bm_hilbert)->Arg(256)->Arg(1024)->Arg(4096)->Arg(16384);
BENCHMARK(bm_rhs_quadratic_hilbert)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(bm_rhs_depth_family)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(bm_integrator_step)->Arg(256)->Arg(1024)->Arg(4096);

BENCHMARK_MAIN();
