#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sensorcfg/graph.hpp"
#include "sensorcfg/oracle.hpp"
#include "support/oracles.hpp"

using namespace sensorcfg;
namespace orc = testing_oracles;

TEST(Graph, BuildRejectsSelfLoopAndOutOfRange) {
  EXPECT_THROW(build_graph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(build_graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(build_graph(3, {{-1, 2}}), GraphError);
}

TEST(Graph, DuplicateEdgesCollapse) {
  const Graph g = build_graph(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(is_valid(g));
}

TEST(Graph, DegreeExamples) {
  EXPECT_EQ(min_degree(cycle_graph(4)), 2u);
  EXPECT_EQ(max_degree(cycle_graph(4)), 2u);
  EXPECT_EQ(min_degree(complete_bipartite(2, 3)), 2u);
  EXPECT_EQ(max_degree(complete_bipartite(2, 3)), 3u);
  EXPECT_EQ(min_degree(complete_bipartite(1, 6)), 1u);
  EXPECT_EQ(max_degree(complete_bipartite(1, 6)), 6u);
}

TEST(Graph, NamedGraphsShape) {
  EXPECT_EQ(petersen_graph().edge_count(), 15u);
  EXPECT_EQ(min_degree(petersen_graph()), 3u);
  EXPECT_EQ(max_degree(petersen_graph()), 3u);
  const Graph s = subdivide(petersen_graph());
  EXPECT_EQ(s.size(), 25u);
  EXPECT_EQ(s.edge_count(), 30u);
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
  EXPECT_EQ(path_graph(4).edge_count(), 3u);
  const Graph u = disjoint_union(cycle_graph(4), cycle_graph(5));
  EXPECT_TRUE(u.has_edge(4, 8));
  EXPECT_FALSE(u.has_edge(3, 4));
}

TEST(Graph, K16FreeExamples) {
  EXPECT_FALSE(is_k16_free(complete_bipartite(1, 6)));
  EXPECT_TRUE(is_k16_free(cycle_graph(7)));
  const auto w = find_induced_star(complete_bipartite(1, 6), 6);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->front(), 0);
  EXPECT_EQ(w->size(), 7u);
}

TEST(Graph, K16FreeAgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<std::size_t> nd(2, 12);
    std::uniform_real_distribution<double> pd(0.1, 0.9);
    const Graph g = orc::random_graph(rng, nd(rng), pd(rng));
    EXPECT_EQ(is_k16_free(g), !orc::has_induced_star(g, 6));
    EXPECT_EQ(is_k1s_free(g, 4), !orc::has_induced_star(g, 4));
  }
}

TEST(Graph, DetectExceptionalReferences) {
  for (ExceptionalKind k : kAllExceptionalKinds) {
    const auto got = detect_exceptional(reference_graph(k));
    ASSERT_TRUE(got.has_value()) << to_string(k);
    EXPECT_EQ(*got, k);
    EXPECT_EQ(exceptional_kind_from_string(to_string(k)), k);
  }
  EXPECT_EQ(detect_exceptional(cycle_graph(7)), ExceptionalKind::C7);
  EXPECT_EQ(detect_exceptional(cycle_graph(4)), ExceptionalKind::C4);
  EXPECT_FALSE(detect_exceptional(cycle_graph(5)).has_value());
  EXPECT_FALSE(detect_exceptional(complete_graph(4)).has_value());
  EXPECT_THROW(detect_exceptional(disjoint_union(cycle_graph(4), cycle_graph(5))), GraphError);
}

TEST(Graph, TwoC4sSharingAVertexIsC4dotC4) {
  const Graph g = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
  EXPECT_EQ(detect_exceptional(g), ExceptionalKind::C4dotC4);
}

TEST(Graph, ReferencesPairwiseNonIsomorphicByBruteForce) {
  for (ExceptionalKind a : kAllExceptionalKinds) {
    for (ExceptionalKind b : kAllExceptionalKinds) {
      EXPECT_EQ(orc::isomorphic(reference_graph(a), reference_graph(b)), a == b);
    }
  }
}

TEST(Graph, DetectExceptionalInvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  for (ExceptionalKind k : kAllExceptionalKinds) {
    const Graph& ref = reference_graph(k);
    for (int t = 0; t < 20; ++t) {
      std::vector<Vertex> perm(ref.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(detect_exceptional(relabel(ref, perm)), k);
    }
  }
  for (int t = 0; t < 100; ++t) {
    const Graph g = orc::random_cycle_with_chords(rng, 7, 2);
    std::vector<Vertex> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(detect_exceptional(g), detect_exceptional(relabel(g, perm)));
  }
}

TEST(Graph, IsomorphismAgreesWithBruteForce) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<std::size_t> nd(1, 7);
    const std::size_t n = nd(rng);
    const Graph a = orc::random_graph(rng, n, 0.5);
    Graph b = orc::random_graph(rng, n, 0.5);
    if (t % 2 == 0) {
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = relabel(a, perm);
    }
    const auto iso = find_isomorphism(a, b);
    EXPECT_EQ(iso.has_value(), orc::isomorphic(a, b));
    if (iso) {
      for (const auto& e : a.edges()) EXPECT_TRUE(b.has_edge((*iso)[e.u], (*iso)[e.v]));
    }
  }
}

TEST(Graph, RdiskExamples) {
  const Graph p = generate_rdisk({{{0, 0}, {1, 0}, {2, 0}}, 1.1});
  EXPECT_EQ(p, path_graph(3));
  const Graph iso = generate_rdisk({{{0, 0}, {3, 0}}, 1.0});
  EXPECT_EQ(iso.edge_count(), 0u);
  EXPECT_THROW(generate_rdisk({{{0, 0}}, 0.0}), GraphError);
  std::mt19937_64 rng(1);
  const Graph big = generate_rdisk(orc::random_points(rng, 200, 10.0, 1.5));
  EXPECT_TRUE(is_k16_free(big));
  EXPECT_FALSE(orc::has_induced_star(big, 6));
}

TEST(Graph, RdiskEdgesMatchDistances) {
  std::mt19937_64 rng(2);
  const PointSet ps = orc::random_points(rng, 60, 5.0, 1.0);
  const Graph g = generate_rdisk(ps);
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.points.size(); ++j) {
      const double dx = ps.points[i].x - ps.points[j].x, dy = ps.points[i].y - ps.points[j].y;
      EXPECT_EQ(g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)), dx * dx + dy * dy <= 1.0);
    }
  }
}

TEST(GraphProperty, RdiskAlwaysValidAndK16Free) {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 1000; ++t) {
    std::uniform_int_distribution<std::size_t> nd(5, 80);
    std::uniform_real_distribution<double> rd(0.5, 3.0);
    const Graph g = generate_rdisk(orc::random_points(rng, nd(rng), 8.0, rd(rng)));
    ASSERT_TRUE(is_valid(g));
    ASSERT_TRUE(is_k16_free(g)) << "trial " << t;
  }
}

TEST(GraphProperty, RdiskNeverInducesK23) {
  std::mt19937_64 rng(77);
  const Graph k23 = complete_bipartite(2, 3);
  for (int t = 0; t < 200; ++t) {
    const Graph g = generate_rdisk(orc::random_points(rng, 10, 2.5, 1.0));
    std::vector<char> pick(g.size(), 0);
    std::fill(pick.begin(), pick.begin() + 5, 1);
    do {
      std::vector<Vertex> s;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (pick[i]) s.push_back(static_cast<Vertex>(i));
      const Graph sub = induced(g, s).graph;
      if (sub.edge_count() == 6) ASSERT_FALSE(orc::isomorphic(sub, k23));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
}

TEST(Graph, ComponentsAndInduced) {
  const auto comps = components(disjoint_union(cycle_graph(4), cycle_graph(5)));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].size(), 4u);
  EXPECT_EQ(comps[1].size(), 5u);

  const std::vector<Vertex> side{2, 3, 4};
  const Subgraph s = induced(complete_bipartite(2, 3), side);
  EXPECT_EQ(s.graph.size(), 3u);
  EXPECT_EQ(s.graph.edge_count(), 0u);
  EXPECT_EQ(s.to_parent, side);
  EXPECT_EQ(s.from_parent[0], -1);
  EXPECT_EQ(s.from_parent[3], 1);

  const std::vector<Vertex> run{2, 3, 4, 5};
  EXPECT_EQ(induced(cycle_graph(7), run).graph, path_graph(4));
  EXPECT_FALSE(is_connected(disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST(Graph, ConnectedGraphCounts) {
  // Connected unlabeled graphs on 1..7 vertices.
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t count = 0;
    for_each_connected_graph(n, [&](const Graph& g) {
      ++count;
      EXPECT_TRUE(orc::connected(g));
    });
    EXPECT_EQ(count, expected[n - 1]) << "n=" << n;
  }
}

TEST(Graph, EnumerationHasNoIsomorphicDuplicates) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto all = enumerate_small_graphs(n, [](const Graph&) { return true; });
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) ASSERT_FALSE(orc::isomorphic(all[i], all[j]));
  }
}
