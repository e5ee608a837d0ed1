#include <benchmark/benchmark.h>

#include "dhero/canonical.hpp"
#include "dhero/coloring.hpp"
#include "dhero/constructions.hpp"
#include "dhero/detection.hpp"
#include "dhero/generators.hpp"

using namespace dhero;

namespace {

void BM_InducedSearchOnDs(benchmark::State& state) {
    const auto host = build_ds(static_cast<int>(state.range(0))).graph;
    const auto pattern = delta(tt(2), c3());
    for (auto _ : state) benchmark::DoNotOptimize(find_induced(pattern, host));
    state.counters["vertices"] = host.size();
}
BENCHMARK(BM_InducedSearchOnDs)->DenseRange(4, 8);

void BM_DichromaticNumberOfDg(benchmark::State& state) {
    MultipartiteStructure parts;
    for (Vertex v = 0; v < 3; ++v) parts.parts.push_back({v});
    const std::vector<std::pair<int, int>> path{{0, 1}, {1, 2}};
    const OrderedGraph g{UndirectedGraph::from_edges(3, path)};
    const auto dg = build_dg(g, c3(), parts);
    for (auto _ : state) benchmark::DoNotOptimize(dichromatic_number(dg.graph));
    state.counters["vertices"] = dg.graph.size();
}
BENCHMARK(BM_DichromaticNumberOfDg);

void BM_CanonicalFormRandomTournament(benchmark::State& state) {
    Rng rng(7);
    const auto t = random_tournament(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t));
}
BENCHMARK(BM_CanonicalFormRandomTournament)->RangeMultiplier(2)->Range(8, 32);

}  // namespace
BENCHMARK_MAIN();
