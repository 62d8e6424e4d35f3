#pragma once

// End-to-end construction of configurations.
//
// solve() handles arbitrary graphs component by component. Components with at
// most seven vertices go to the exact search; larger ones are reduced, cut
// down to a sparse spanning subgraph, configured piecewise and glued back
// together. Every returned configuration has been checked by `verify`.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sensorcfg/graph.hpp"
#include "sensorcfg/labeling.hpp"
#include "sensorcfg/lemmas.hpp"

namespace sensorcfg {

/// The construction reached a state it has no rule for. Never expected on
/// inputs meeting the hypotheses; surfaced instead of returning a bad answer.
class SolverGap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SolveStatus { Configured, Exceptional, PreconditionFailed };

std::string_view to_string(SolveStatus s);

struct ComponentResult {
  std::vector<Vertex> vertices;  // ids in the input graph, ascending
  SolveStatus status = SolveStatus::Configured;
  std::optional<ExceptionalKind> kind;  // set iff Exceptional
  std::string reason;                   // set iff PreconditionFailed
  /// Offending vertex (min degree) or induced K_{1,6} center followed by its
  /// six leaves.
  std::vector<Vertex> witness;
};

struct SolveResult {
  /// PreconditionFailed if any component failed, else Exceptional if any
  /// component is exceptional, else Configured.
  SolveStatus status = SolveStatus::Configured;
  /// Labels for every Configured component; other vertices stay unassigned.
  PartialConfiguration labels;
  /// Set iff status == Configured.
  std::optional<Configuration> configuration;
  std::vector<ComponentResult> components;
  ReductionTrace trace;
};

SolveResult solve(const Graph& g);

// ---------------------------------------------------------------------------
// Sparse instances: connected, min degree >= 2, max degree <= 5, and no two
// vertices of degree >= 3 adjacent.

class SparseInstance {
 public:
  /// Throws PreconditionError if a condition fails.
  explicit SparseInstance(Graph g);
  const Graph& graph() const { return g_; }

 private:
  Graph g_;
};

/// Configured unless the graph is C4, C7, C4.C4 or K23 (Exceptional).
SolveResult solve_sparse_special(const SparseInstance& inst);

/// Spanning subgraph with min degree >= 2, no edge between two vertices of
/// degree >= 3, and (for K_{1,6}-free input) max degree <= 5. Throws
/// PreconditionError if g has min degree < 2.
Graph minimize_spanning_subgraph(const Graph& g);

/// Data of the base construction for a sparse instance in which the
/// reduction rules no longer apply. Graphs are on the full vertex set; only
/// vertices of degree >= 3 ("big") carry H, H2, Hprime and L edges.
struct AuxiliaryGraphs {
  std::vector<Vertex> big;
  Graph H, H2, Hprime, L;
  std::vector<int> color;  // 1..4 on big vertices, 0 elsewhere
  std::vector<Vertex> U, W, X, Y;
  PartialConfiguration initial;  // f on big vertices and U
};

AuxiliaryGraphs build_auxiliary(const Graph& g);

/// r-configuration with floor(5r/2) labels from a configuration f of g.
/// Throws LabelError if f does not verify, PreconditionError if g has an
/// isolated vertex or r < 1.
RConfiguration make_r_configuration(const Graph& g, const Configuration& f, int r);

}  // namespace sensorcfg
