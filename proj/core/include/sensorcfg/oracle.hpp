#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sensorcfg/graph.hpp"
#include "sensorcfg/labeling.hpp"

namespace sensorcfg {

struct OracleBudget {
  std::uint64_t node_limit = 100'000'000;
  double time_limit_seconds = 60.0;
};

struct OracleOptions {
  /// Closed-neighborhood and feasibility pruning. Disabling leaves plain
  /// generate-and-test, which exists to cross-check the pruned search.
  bool prune = true;
  /// Fix the first branched vertex to {1,2}. Sound for decision queries
  /// because satisfaction is invariant under label permutations.
  bool break_symmetry = true;
  /// Size t of the label universe {1..t}; pairs are drawn from it and every
  /// closed neighborhood must cover all of it. 5 for configurations.
  int labels = kLabelCount;
};

enum class OracleOutcome { Configurable, NotConfigurable, BudgetExceeded };

struct OracleResult {
  OracleOutcome outcome = OracleOutcome::BudgetExceeded;
  std::optional<Configuration> configuration;  // set iff Configurable
  std::uint64_t nodes = 0;
};

class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decides configurability by backtracking over the label pairs in BFS order
/// from a maximum-degree vertex. A Configurable result always verifies.
OracleResult exact_solve(const Graph& g, OracleBudget budget = {}, OracleOptions options = {});

/// Largest t in 2..5 such that a 2-configuration using exactly t labels
/// exists. Throws BudgetExceededError if any sub-search runs out of budget,
/// GraphError on the empty graph.
int d2_max(const Graph& g, OracleBudget budget = {});

/// Constrained search shared by the oracle and the lemma toolkit.
struct AssignmentQuery {
  /// Vertices excused from the satisfaction requirement.
  std::vector<char> exempt;
  /// Pre-assigned vertices; the search only branches on the others.
  PartialConfiguration fixed;
  int labels = kLabelCount;
  bool prune = true;
  bool break_symmetry = false;
};

enum class SearchStatus { Exhausted, Stopped, BudgetExceeded };

struct SearchReport {
  SearchStatus status = SearchStatus::Exhausted;
  std::uint64_t nodes = 0;
};

/// Calls `on_solution` with each complete assignment meeting the query; the
/// callback returns false to stop. Label pairs are encoded as LabelPair even
/// for t < 5 (they only use labels 1..t).
SearchReport search_assignments(const Graph& g, const AssignmentQuery& query, OracleBudget budget,
                                const std::function<bool(const PartialConfiguration&)>& on_solution);

// ---------------------------------------------------------------------------
// Small-graph enumeration

/// Canonical code of a graph with at most 11 vertices: the lexicographically
/// least upper-triangle adjacency bitstring over vertex orders that respect an
/// isomorphism-invariant refinement. Equal codes iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// Calls `visit` once per connected graph on n vertices up to isomorphism
/// (n in 1..8), in a deterministic order. Throws std::invalid_argument for n
/// outside that range.
void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

/// Connected graphs on n vertices up to isomorphism that satisfy `keep`.
std::vector<Graph> enumerate_small_graphs(std::size_t n, const std::function<bool(const Graph&)>& keep);

}  // namespace sensorcfg
