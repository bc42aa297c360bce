#include "spirits/dynamics.hpp"
#include "spirits/feedback.hpp"
#include "spirits/rare_events.hpp"
#include "spirits/shocks.hpp"

#include <benchmark/benchmark.h>

namespace {

spirits::MapParams bistable_map() {
    spirits::MapParams p;
    p.c_min = 0.4;
    p.c_max = 1.4;
    p.c_0 = 0.75;
    p.theta = 5.0;
    return p;
}

void bm_g_eval(benchmark::State& state) {
    const auto p = bistable_map();
    double c = 0.9;
    for (auto _ : state) {
        c = spirits::g_eval(p, c);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(bm_g_eval);

void bm_map_step(benchmark::State& state) {
    const auto p = bistable_map();
    spirits::ShockParams sp;
    sp.sigma = 0.6;
    sp.eta = 0.5;
    spirits::ShockStream shocks(sp);
    double x = 0.0;
    for (auto _ : state) {
        x = spirits::h_eval(p, x) + shocks.next();
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(bm_map_step);

void bm_fixed_points(benchmark::State& state) {
    const auto p = bistable_map();
    for (auto _ : state) {
        auto fps = spirits::fixed_points(p);
        benchmark::DoNotOptimize(fps);
    }
}
BENCHMARK(bm_fixed_points);

void bm_simulate_100k(benchmark::State& state) {
    spirits::SimConfig cfg;
    cfg.map = bistable_map();
    cfg.steps = 100000;
    cfg.burn_in = 10000;
    for (auto _ : state) {
        auto traj = spirits::simulate(cfg);
        benchmark::DoNotOptimize(traj);
    }
}
BENCHMARK(bm_simulate_100k)->Unit(benchmark::kMillisecond);

void bm_potential(benchmark::State& state) {
    const auto p = bistable_map();
    for (auto _ : state) {
        auto prof = spirits::potential(p);
        benchmark::DoNotOptimize(prof);
    }
}
BENCHMARK(bm_potential)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
