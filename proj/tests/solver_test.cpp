#include <gtest/gtest.h>

#include <random>

#include "sensorcfg/solver.hpp"
#include "support/fixtures.hpp"
#include "support/solver_checks.hpp"

using namespace sensorcfg;
namespace orc = testing_oracles;
namespace chk = testing_checks;

namespace {

std::size_t big_big_edges(const Graph& g) {
  std::size_t c = 0;
  for (const Edge& e : g.edges())
    if (g.degree(e.u) >= 3 && g.degree(e.v) >= 3) ++c;
  return c;
}

bool is_spanning_subgraph(const Graph& sub, const Graph& g) {
  if (sub.size() != g.size()) return false;
  for (const Edge& e : sub.edges())
    if (!g.has_edge(e.u, e.v)) return false;
  return true;
}

}  // namespace

TEST(Solve, Examples) {
  const SolveResult c4 = solve(cycle_graph(4));
  EXPECT_EQ(c4.status, SolveStatus::Exceptional);
  ASSERT_EQ(c4.components.size(), 1u);
  EXPECT_EQ(c4.components[0].kind, ExceptionalKind::C4);
  EXPECT_FALSE(c4.configuration.has_value());

  const SolveResult pet = solve(petersen_graph());
  ASSERT_EQ(pet.status, SolveStatus::Configured);
  EXPECT_TRUE(orc::is_configuration(petersen_graph(), *pet.configuration));

  // K_{1,6} plus a perfect matching on the leaves.
  const Graph g = complete_bipartite(1, 6).with_edge(1, 2).with_edge(3, 4).with_edge(5, 6);
  EXPECT_TRUE(is_k16_free(g));
  const SolveResult m = solve(g);
  ASSERT_EQ(m.status, SolveStatus::Configured);
  EXPECT_TRUE(orc::is_configuration(g, *m.configuration));
}

TEST(Solve, PreconditionFailuresCarryWitnesses) {
  const SolveResult p = solve(path_graph(3));
  EXPECT_EQ(p.status, SolveStatus::PreconditionFailed);
  EXPECT_EQ(p.components[0].reason, "min-degree");
  ASSERT_EQ(p.components[0].witness.size(), 1u);
  EXPECT_EQ(path_graph(3).degree(p.components[0].witness[0]), 1u);

  // K_{1,6} with a pendant cycle through each leaf keeps min degree 2.
  std::vector<Edge> edges;
  for (Vertex l = 1; l <= 6; ++l) {
    edges.push_back({0, l});
    edges.push_back({l, static_cast<Vertex>(6 + l)});
    edges.push_back({static_cast<Vertex>(6 + l), static_cast<Vertex>(12 + l)});
    edges.push_back({static_cast<Vertex>(12 + l), l});
  }
  const Graph star = build_graph(19, edges);
  const SolveResult s = solve(star);
  EXPECT_EQ(s.status, SolveStatus::PreconditionFailed);
  EXPECT_EQ(s.components[0].reason, "induced-k16");
  ASSERT_EQ(s.components[0].witness.size(), 7u);
  const auto& w = s.components[0].witness;
  for (std::size_t i = 1; i < 7; ++i) {
    EXPECT_TRUE(star.has_edge(w[0], w[i]));
    for (std::size_t j = i + 1; j < 7; ++j) EXPECT_FALSE(star.has_edge(w[i], w[j]));
  }
}

TEST(Solve, ComponentsAreIndependent) {
  const Graph g = disjoint_union(disjoint_union(cycle_graph(5), cycle_graph(7)), petersen_graph());
  const SolveResult r = solve(g);
  EXPECT_EQ(r.status, SolveStatus::Exceptional);
  ASSERT_EQ(r.components.size(), 3u);
  EXPECT_EQ(r.components[0].status, SolveStatus::Configured);
  EXPECT_EQ(r.components[1].kind, ExceptionalKind::C7);
  EXPECT_EQ(r.components[2].status, SolveStatus::Configured);
  for (Vertex v : r.components[0].vertices) EXPECT_TRUE(r.labels.is_assigned(v));
  for (Vertex v : r.components[1].vertices) EXPECT_FALSE(r.labels.is_assigned(v));
}

TEST(Solve, AgreesWithExhaustiveSearchUpToSevenVertices) {
  std::size_t exceptional = 0;
  for (std::size_t n = 3; n <= 7; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      if (min_degree(g) < 2 || !is_k16_free(g)) return;
      const SolveResult r = solve(g);
      const bool yes = orc::configurable(g);
      ASSERT_NE(r.status, SolveStatus::PreconditionFailed);
      EXPECT_EQ(r.status == SolveStatus::Configured, yes);
      if (r.configuration) EXPECT_TRUE(orc::is_configuration(g, *r.configuration));
      if (!yes) ++exceptional;
    });
  }
  EXPECT_EQ(exceptional, 8u);
}

TEST(Solve, TwelveVertexStarOnC7) {
  const auto fx = testing_fixtures::load("c7_star21");
  EXPECT_TRUE(orc::is_configuration(fx.graph, fx.config));
  const SolveResult r = solve_sparse_special(SparseInstance(fx.graph));
  ASSERT_EQ(r.status, SolveStatus::Configured);
  EXPECT_TRUE(orc::is_configuration(fx.graph, *r.configuration));
  EXPECT_EQ(r.configuration->partial().at(0), LabelPair(1, 2));
  EXPECT_EQ(r.configuration->partial().at(1), LabelPair(4, 5));
}

TEST(Solve, SparseSpecialExamples) {
  EXPECT_EQ(solve_sparse_special(SparseInstance(cycle_graph(7))).status, SolveStatus::Exceptional);
  const Graph sp = subdivide(petersen_graph());
  const SolveResult r = solve_sparse_special(SparseInstance(sp));
  ASSERT_EQ(r.status, SolveStatus::Configured);
  EXPECT_TRUE(orc::is_configuration(sp, *r.configuration));
  EXPECT_THROW(SparseInstance{petersen_graph()}, PreconditionError);   // adjacent big vertices
  EXPECT_THROW(SparseInstance{path_graph(4)}, PreconditionError);      // min degree
  EXPECT_THROW(SparseInstance{subdivide(complete_graph(7))}, PreconditionError);  // max degree 6
}

TEST(Solve, SubdividedGraphsConfigure) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    Graph base = orc::random_cycle_with_chords(rng, 5 + static_cast<std::size_t>(t % 12), 4);
    if (max_degree(base) > 5) continue;
    const Graph g = subdivide(base);
    const SolveResult r = solve_sparse_special(SparseInstance(g));
    ASSERT_EQ(r.status, SolveStatus::Configured) << t;
    EXPECT_TRUE(orc::is_configuration(g, *r.configuration));
  }
}

TEST(Minimize, Examples) {
  const Graph k4 = minimize_spanning_subgraph(complete_graph(4));
  EXPECT_EQ(k4.edge_count(), 4u);
  EXPECT_EQ(min_degree(k4), 2u);
  EXPECT_EQ(minimize_spanning_subgraph(cycle_graph(7)), cycle_graph(7));
  EXPECT_THROW(minimize_spanning_subgraph(path_graph(3)), PreconditionError);
}

TEST(Minimize, GuaranteesOnRandomK16FreeGraphs) {
  std::mt19937_64 rng(40);
  std::size_t checked = 0;
  while (checked < 200) {
    const Graph g = generate_rdisk(orc::random_points(rng, 40, 4.0, 1.0));
    for (const Graph& h : orc::two_core_components(g)) {
      const Graph m = minimize_spanning_subgraph(h);
      ++checked;
      EXPECT_TRUE(is_spanning_subgraph(m, h));
      EXPECT_GE(min_degree(m), 2u);
      EXPECT_LE(max_degree(m), 5u);
      EXPECT_EQ(big_big_edges(m), 0u);
    }
  }
}

TEST(Auxiliary, InvariantsOnSparseInstances) {
  std::mt19937_64 rng(50);
  int checked = 0;
  for (int t = 0; t < 80; ++t) {
    const Graph base = orc::random_cycle_with_chords(rng, 6 + static_cast<std::size_t>(t % 15), 5);
    if (max_degree(base) > 5) continue;
    const Graph g = subdivide(base);
    AuxiliaryGraphs a;
    try {
      a = build_auxiliary(g);
    } catch (const SolverGap&) {
      continue;  // H of degree above two: the reduction rules handle those first.
    }
    ++checked;
    EXPECT_LE(max_degree(a.H), 2u);
    for (const Edge& e : a.Hprime.edges()) EXPECT_NE(a.color[e.u], a.color[e.v]);
    for (Vertex u : a.U) {
      ASSERT_EQ(g.degree(u), 2u);
      const Vertex x = g.neighbors(u)[0], y = g.neighbors(u)[1];
      EXPECT_NE(a.color[x], a.color[y]);
      EXPECT_EQ((a.initial.labels(x) | a.initial.labels(y)).size(), 3);
    }
    std::vector<Vertex> xy = a.X;
    xy.insert(xy.end(), a.Y.begin(), a.Y.end());
    std::sort(xy.begin(), xy.end());
    std::vector<Vertex> w = a.W;
    std::sort(w.begin(), w.end());
    EXPECT_EQ(xy, w);
    EXPECT_EQ(std::adjacent_find(xy.begin(), xy.end()), xy.end());
  }
  EXPECT_GT(checked, 10);
}

TEST(RConfiguration, Examples) {
  const Graph c5 = cycle_graph(5);
  const Configuration f = make_configuration({{1, 4}, {2, 5}, {1, 3}, {2, 4}, {3, 5}});
  const RConfiguration two = make_r_configuration(c5, f, 2);
  EXPECT_EQ(r_size(two), 5u);
  for (int r : {3, 4}) {
    const RConfiguration rc = make_r_configuration(c5, f, r);
    EXPECT_TRUE(verify_r_configuration(c5, rc));
    EXPECT_TRUE(orc::r_configuration_ok(c5, rc.sets, r));
    EXPECT_EQ(r_size(rc), static_cast<std::size_t>(5 * r / 2));
  }
  const RConfiguration one = make_r_configuration(c5, f, 1);
  EXPECT_TRUE(orc::r_configuration_ok(c5, one.sets, 1));
  EXPECT_EQ(r_size(one), 2u);
  EXPECT_THROW(make_r_configuration(c5, Configuration(std::vector<LabelPair>(5, LabelPair(1, 2))), 3), LabelError);
  EXPECT_THROW(make_r_configuration(c5, f, 0), PreconditionError);
}

TEST(RConfiguration, FloorOnSolverOutputs) {
  const auto t = chk::check_r_configurations(20, 7);
  EXPECT_TRUE(t.ok()) << t.first_failure;
}

TEST(SolveProperty, RandomRdiskInstances) {
  const auto t = chk::check_rdisk_instances(300, 60, 2024);
  EXPECT_TRUE(t.ok()) << t.failures << " failures, first: " << t.first_failure;
  EXPECT_GT(t.components_solved, 100u);
}

TEST(SolveProperty, LargerRdiskInstances) {
  std::mt19937_64 rng(6);
  std::size_t largest = 0;
  for (int t = 0; t < 10; ++t) {
    const Graph g = generate_rdisk(orc::random_points(rng, 400, 14.0, 1.0));
    for (const Graph& h : orc::two_core_components(g)) {
      largest = std::max(largest, h.size());
      const SolveResult r = solve(h);
      ASSERT_NE(r.status, SolveStatus::PreconditionFailed);
      if (r.configuration) EXPECT_TRUE(orc::is_configuration(h, *r.configuration));
    }
  }
  EXPECT_GT(largest, 200u);
}

TEST(SolveProperty, Deterministic) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Graph g = orc::random_cycle_with_chords(rng, 30, 12);
    if (!is_k16_free(g)) continue;
    const SolveResult a = solve(g), b = solve(g);
    EXPECT_EQ(a.labels, b.labels);
  }
}
