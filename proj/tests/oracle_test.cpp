#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "sensorcfg/oracle.hpp"
#include "support/oracles.hpp"

using namespace sensorcfg;
namespace orc = testing_oracles;

TEST(Oracle, Examples) {
  EXPECT_EQ(exact_solve(cycle_graph(4)).outcome, OracleOutcome::NotConfigurable);
  const OracleResult c3 = exact_solve(cycle_graph(3));
  ASSERT_EQ(c3.outcome, OracleOutcome::Configurable);
  EXPECT_TRUE(orc::is_configuration(cycle_graph(3), *c3.configuration));
  EXPECT_EQ(exact_solve(reference_graph(ExceptionalKind::G4)).outcome, OracleOutcome::NotConfigurable);
}

TEST(Oracle, ExceptionalGraphsRefutedQuickly) {
  for (ExceptionalKind k : kAllExceptionalKinds) {
    const auto start = std::chrono::steady_clock::now();
    const OracleResult r = exact_solve(reference_graph(k));
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_EQ(r.outcome, OracleOutcome::NotConfigurable) << to_string(k);
    EXPECT_LT(s, 5.0) << to_string(k);
    EXPECT_FALSE(orc::configurable(reference_graph(k))) << to_string(k);
  }
}

TEST(Oracle, BudgetIsReported) {
  OracleBudget tiny;
  tiny.node_limit = 3;
  EXPECT_EQ(exact_solve(cycle_graph(7), tiny).outcome, OracleOutcome::BudgetExceeded);
  EXPECT_THROW(d2_max(cycle_graph(7), tiny), BudgetExceededError);
}

TEST(Oracle, D2MaxExamples) {
  EXPECT_EQ(d2_max(cycle_graph(4)), 4);
  EXPECT_EQ(d2_max(cycle_graph(5)), 5);
  EXPECT_EQ(d2_max(complete_bipartite(2, 3)), 4);
  EXPECT_THROW(d2_max(Graph()), GraphError);
}

TEST(Oracle, AgreesWithNaiveSearchUpToSixVertices) {
  OracleOptions plain;
  plain.prune = false;
  plain.break_symmetry = false;
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      const OracleResult r = exact_solve(g);
      ASSERT_NE(r.outcome, OracleOutcome::BudgetExceeded);
      const bool yes = r.outcome == OracleOutcome::Configurable;
      EXPECT_EQ(yes, orc::configurable(g));
      if (yes) EXPECT_TRUE(orc::is_configuration(g, *r.configuration));
      if (n <= 5) EXPECT_EQ(exact_solve(g, {}, plain).outcome, r.outcome);
      EXPECT_EQ(d2_max(g) == 5, yes);
    });
  }
}

TEST(Oracle, SevenVertexExceptionalSetMatchesDetection) {
  // Exhaustive check at n <= 7: non-configurable iff one of the eight.
  std::size_t tested = 0;
  for (std::size_t n = 3; n <= 7; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      if (min_degree(g) < 2 || !is_k16_free(g)) return;
      ++tested;
      const OracleResult r = exact_solve(g);
      ASSERT_NE(r.outcome, OracleOutcome::BudgetExceeded);
      EXPECT_EQ(r.outcome == OracleOutcome::NotConfigurable, detect_exceptional(g).has_value());
    });
  }
  EXPECT_GT(tested, 500u);
}

TEST(Oracle, EnumerationExamples) {
  const auto four = enumerate_small_graphs(4, [](const Graph& g) { return min_degree(g) >= 2; });
  ASSERT_EQ(four.size(), 3u);
  std::vector<std::size_t> edges;
  for (const auto& g : four) edges.push_back(g.edge_count());
  std::sort(edges.begin(), edges.end());
  EXPECT_EQ(edges, (std::vector<std::size_t>{4, 5, 6}));
  EXPECT_EQ(enumerate_small_graphs(3, [](const Graph&) { return true; }).size(), 2u);
  const Graph k23 = complete_bipartite(2, 3);
  EXPECT_EQ(enumerate_small_graphs(5, [&](const Graph& g) { return orc::isomorphic(g, k23); }).size(), 1u);
  EXPECT_THROW(for_each_connected_graph(9, [](const Graph&) {}), std::invalid_argument);
}

TEST(Oracle, CanonicalCodeMatchesIsomorphism) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const Graph a = orc::random_graph(rng, 7, 0.45);
    Graph b = orc::random_graph(rng, 7, 0.45);
    if (t % 2) {
      std::vector<Vertex> perm(7);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = relabel(a, perm);
    }
    EXPECT_EQ(canonical_code(a) == canonical_code(b), orc::isomorphic(a, b));
  }
}

TEST(Oracle, SearchHonorsFixedAndExempt) {
  const Graph p = path_graph(3);
  AssignmentQuery q;
  q.fixed = PartialConfiguration(3);
  q.fixed.assign(0, LabelPair(1, 2));
  q.fixed.assign(2, LabelPair(1, 3));
  q.exempt = {1, 0, 1};
  std::size_t count = 0;
  search_assignments(p, q, {}, [&](const PartialConfiguration& f) {
    ++count;
    EXPECT_EQ(f.at(0), LabelPair(1, 2));
    EXPECT_EQ(closed_neighborhood_labels(p, f, 1), LabelSet::full());
    return true;
  });
  EXPECT_EQ(count, 1u);  // only {4,5}
}
