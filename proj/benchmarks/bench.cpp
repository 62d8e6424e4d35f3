#include <benchmark/benchmark.h>

#include <random>

#include "sensorcfg/counterexamples.hpp"
#include "sensorcfg/oracle.hpp"
#include "sensorcfg/solver.hpp"

using namespace sensorcfg;

namespace {

// Largest component of the 2-core of a random R-disk graph with about six
// neighbors per point.
Graph rdisk_component(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double box = std::sqrt(3.14159 * static_cast<double>(n) / 6.0);
  std::uniform_real_distribution<double> coord(0.0, box);
  PointSet ps;
  for (std::size_t i = 0; i < n; ++i) ps.points.push_back({coord(rng), coord(rng)});
  Graph g = generate_rdisk(ps);
  for (;;) {
    std::vector<Vertex> low;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g.degree(static_cast<Vertex>(v)) < 2) low.push_back(static_cast<Vertex>(v));
    if (low.empty()) break;
    g = remove_vertices(g, low).graph;
  }
  std::vector<Vertex> best;
  for (auto& c : components(g))
    if (c.size() > best.size()) best = std::move(c);
  return induced(g, best).graph;
}

void BM_SolveRdisk(benchmark::State& state) {
  const Graph g = rdisk_component(static_cast<std::size_t>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(solve(g));
  state.counters["vertices"] = static_cast<double>(g.size());
}
BENCHMARK(BM_SolveRdisk)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SolveSubdividedPetersen(benchmark::State& state) {
  const Graph g = subdivide(petersen_graph());
  for (auto _ : state) benchmark::DoNotOptimize(solve(g));
}
BENCHMARK(BM_SolveSubdividedPetersen)->Unit(benchmark::kMicrosecond);

void BM_ExactRefutation(benchmark::State& state) {
  const auto kind = kAllExceptionalKinds[state.range(0)];
  const Graph& g = reference_graph(kind);
  for (auto _ : state) benchmark::DoNotOptimize(exact_solve(g));
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_ExactRefutation)->DenseRange(0, 7)->Unit(benchmark::kMicrosecond);

void BM_MinimizeSpanningSubgraph(benchmark::State& state) {
  const Graph g = rdisk_component(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(minimize_spanning_subgraph(g));
}
BENCHMARK(BM_MinimizeSpanningSubgraph)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_K19Certificate(benchmark::State& state) {
  const K19Family fam = build_k19_family(1);
  for (auto _ : state) benchmark::DoNotOptimize(check_k19_nonconfigurable(fam));
}
BENCHMARK(BM_K19Certificate)->Unit(benchmark::kMillisecond);

void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_connected_graph(static_cast<std::size_t>(state.range(0)), [&](const Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateConnected)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
