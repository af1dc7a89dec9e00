#include <benchmark/benchmark.h>

#include "cyclecover/classify.hpp"
#include "cyclecover/flows.hpp"
#include "cyclecover/generators.hpp"
#include "cyclecover/ribbon.hpp"
#include "cyclecover/search.hpp"

using namespace cyclecover;

namespace {

const CubicGraph& petersen() {
    static CubicGraph g = gen_named("petersen");
    return g;
}

const CubicGraph& blanusa() {
    static CubicGraph g = gen_named("blanusa1");
    return g;
}

void bm_perfect_matchings(benchmark::State& state) {
    const auto& g = blanusa();
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_perfect_matchings(g));
}
BENCHMARK(bm_perfect_matchings);

void bm_search_first(benchmark::State& state) {
    const auto& g = blanusa();
    SearchConfig cfg;
    cfg.mode = SearchMode::first;
    for (auto _ : state)
        benchmark::DoNotOptimize(search_cycle_cover(g, cfg).covers.size());
}
BENCHMARK(bm_search_first);

void bm_search_all_oriented(benchmark::State& state) {
    const auto& g = petersen();
    SearchConfig cfg;
    cfg.oriented = true;
    cfg.mode = SearchMode::all;
    for (auto _ : state)
        benchmark::DoNotOptimize(search_cycle_cover(g, cfg).oriented.size());
}
BENCHMARK(bm_search_all_oriented);

void bm_classify(benchmark::State& state) {
    const auto& g = petersen();
    SearchConfig cfg;
    cfg.oriented = true;
    cfg.mode = SearchMode::first;
    auto oc = search_cycle_cover(g, cfg).oriented.front();
    for (auto _ : state) benchmark::DoNotOptimize(classify(oc));
}
BENCHMARK(bm_classify);

void bm_face_tracing(benchmark::State& state) {
    const auto& g = blanusa();
    RotationSystem rot;
    rot.order.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        rot.order[v] = g.incident_edges(v);
    for (auto _ : state) benchmark::DoNotOptimize(trace_faces(g, rot));
}
BENCHMARK(bm_face_tracing);

void bm_triple_classes(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(triple_classes());
}
BENCHMARK(bm_triple_classes);

void bm_nz_flow(benchmark::State& state) {
    const auto& g = petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(find_nz_flow(g, g.all_edges(), 5));
}
BENCHMARK(bm_nz_flow);

}  // namespace

BENCHMARK_MAIN();
