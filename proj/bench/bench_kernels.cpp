// Serial against OpenMP-parallel versions of the heavier kernels.

#include <benchmark/benchmark.h>

#include "wheelkit/coloring.hpp"
#include "wheelkit/connectivity.hpp"
#include "wheelkit/wheels.hpp"
#include "wheelkit/zoo.hpp"

using namespace wheelkit;

namespace {

Exec mode(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(1) ? "parallel" : "serial"); }

Graph sparse(int n) { return random_graph(n, 4.0 / n, 11); }

void BM_FindWheel(benchmark::State& state) {
    Graph g = make_wheel_free(sparse(static_cast<int>(state.range(0))), 3);
    for (auto _ : state) benchmark::DoNotOptimize(find_wheel(g, mode(state)));
    label(state);
}

void BM_WheelCenters(benchmark::State& state) {
    Graph g = sparse(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(wheel_centers(g, mode(state)));
    label(state);
}

void BM_Kappa(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 5);
    for (auto _ : state) benchmark::DoNotOptimize(kappa(g, mode(state)));
    label(state);
}

void BM_EssentialEdges(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 8);
    for (auto _ : state) benchmark::DoNotOptimize(essential_edges(g, mode(state)));
    label(state);
}

void BM_Color4(benchmark::State& state) {
    Graph g = make_wheel_free(sparse(static_cast<int>(state.range(0))), 9);
    for (auto _ : state) benchmark::DoNotOptimize(color4_long(g, mode(state)));
    label(state);
}

}  // namespace

BENCHMARK(BM_FindWheel)->ArgsProduct({{16, 64, 256}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WheelCenters)->ArgsProduct({{16, 32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Kappa)->ArgsProduct({{16, 48, 96}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EssentialEdges)->ArgsProduct({{16, 24}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Color4)->ArgsProduct({{16, 64, 256}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
