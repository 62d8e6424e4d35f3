#pragma once

// Helpers shared by the lemma toolkit and the solver. Not installed.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sensorcfg/graph.hpp"
#include "sensorcfg/labeling.hpp"

namespace sensorcfg::detail {

inline std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

/// Lexicographically first label permutation satisfying `pred`.
std::optional<LabelPermutation> first_permutation(const std::function<bool(const LabelPermutation&)>& pred);

/// Two-label set containing `required` (at most two labels), padded with the
/// smallest labels outside `avoid`, then the smallest labels overall.
LabelPair pad_to_pair(LabelSet required, LabelSet avoid = {});

/// Assigns the unlabeled vertices in `fresh` by exhaustive search so that each
/// of them is satisfied. Their labeled neighbors are fixed; unlabeled
/// neighbors outside `fresh` are ignored. Returns false if impossible.
bool complete_by_search(const Graph& g, PartialConfiguration& f, std::span<const Vertex> fresh);

/// Exact search on a small graph. Throws std::logic_error if the search runs
/// out of budget.
std::optional<Configuration> exact_configuration(const Graph& g);

/// All automorphisms of a graph with at most 8 vertices, as vertex maps.
std::vector<std::vector<Vertex>> automorphisms(const Graph& g);

/// True if every vertex of `vs` sees all five labels among assigned vertices
/// of its closed neighborhood.
bool all_covered(const Graph& g, const PartialConfiguration& f, std::span<const Vertex> vs);

}  // namespace sensorcfg::detail
