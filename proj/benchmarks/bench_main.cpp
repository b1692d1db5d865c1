#include <benchmark/benchmark.h>

#include "tsurf/algebra.hpp"
#include "tsurf/dissection.hpp"
#include "tsurf/enumerate.hpp"

using namespace tsurf;

namespace {

SurfaceSpec spec_of(int which) {
  switch (which) {
    case 0: return {0, {7}, 0};
    case 1: return {0, {4}, 1};
    case 2: return {0, {1, 1}, 0};
    default: return {0, {2}, 2};
  }
}

PartialTaggedTriangulation base(const SurfaceModel& s) {
  std::vector<TaggedArc> arcs;
  for (int e = 0; e < s.rank(); ++e) arcs.push_back(edge_arc(s, e));
  return make_partial(s, arcs);
}

// Base triangulation minus its last arc: a partial context with a bigger
// standard-arc search.
PartialTaggedTriangulation partial(const SurfaceModel& s) {
  std::vector<TaggedArc> arcs;
  for (int e = 0; e + 1 < s.rank(); ++e) arcs.push_back(edge_arc(s, e));
  return make_partial(s, arcs);
}

void BM_EnumerateTaggedArcs(benchmark::State& state) {
  SurfaceModel s = build_surface(spec_of(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tagged_arcs(s, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_EnumerateTaggedArcs)->Args({0, 6})->Args({1, 8})->Args({2, 8})->Args({3, 6});

void BM_EnumerateDissections(benchmark::State& state) {
  SurfaceModel s = build_surface(spec_of(static_cast<int>(state.range(0))));
  PartialTaggedTriangulation r = partial(s);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_dissections(s, r));
}
BENCHMARK(BM_EnumerateDissections)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ExchangeGraph(benchmark::State& state) {
  SurfaceModel s = build_surface(spec_of(static_cast<int>(state.range(0))));
  PartialTaggedTriangulation r = base(s);
  GraphLimits limits{100000, 24};
  for (auto _ : state) benchmark::DoNotOptimize(exchange_graph(s, r, limits, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_ExchangeGraph)->Args({0, 1})->Args({0, 4})->Args({1, 1})->Args({1, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Standardness(benchmark::State& state) {
  SurfaceModel s = build_surface(spec_of(static_cast<int>(state.range(0))));
  PartialTaggedTriangulation r = partial(s);
  auto arcs = enumerate_tagged_arcs(s, 6);
  int method = static_cast<int>(state.range(1));
  PartialTaggedTriangulation t = good_completion(s, r);
  for (auto _ : state) {
    int count = 0;
    for (const auto& a : arcs) {
      if (method == 0) count += is_standard(s, a, r);
      else if (method == 1) count += is_standard_geometric(s, a, r);
      else count += is_standard_by_completion(s, a, r, t);
    }
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(arcs.size()));
}
BENCHMARK(BM_Standardness)->ArgsProduct({{0, 1, 3}, {0, 1, 2}})->ArgNames({"surface", "method"});

}  // namespace

BENCHMARK_MAIN();
