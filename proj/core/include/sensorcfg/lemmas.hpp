#pragma once

// Local extension and reduction rules. Each operation takes a host graph and
// a partial configuration that is valid on the already-built part, and
// assigns labels to new vertices so that they are satisfied without touching
// the host's labels (up to an explicit label permutation where noted).
//
// Paths are always described by their vertex counts.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sensorcfg/graph.hpp"
#include "sensorcfg/labeling.hpp"

namespace sensorcfg {

/// A precondition of a lemma operation does not hold.
class LemmaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Path of four vertices v1 v2 v3 v4 with both ends labeled.

/// Label for v3 such that v2 = `ab` and v3 are both satisfied. Requires
/// f1 and f4 to intersect and `ab` to be disjoint from f1.
LabelPair path3_completion(LabelPair f1, LabelPair f4, LabelPair ab);

/// Host-graph form: assigns f(v2) = ab and f(v3) = path3_completion(...).
void extend_path3(const Graph& g, PartialConfiguration& f, Vertex v1, Vertex v2, Vertex v3, Vertex v4,
                  LabelPair ab);

// ---------------------------------------------------------------------------
// Attaching a path or a star to a configured graph.

/// Labels for a path v1..vk (k >= 3) whose ends hang off vertices labeled fx
/// and fy. Uses the three normal forms of (fx, fy) and the nine-row table.
std::vector<LabelPair> attached_path_labels(LabelPair fx, LabelPair fy, std::size_t k);

/// `path` lists v1..vk; v1 must be adjacent to x and vk to y (x == y allowed).
void extend_attached_path(const Graph& g, PartialConfiguration& f, std::span<const Vertex> path, Vertex x,
                          Vertex y);

/// (alpha, beta)-star: center w, alpha rays w-x_i with x_i adjacent to the
/// anchor u_i, beta rays w-y_j-z_j with z_j adjacent to the anchor v_j.
struct StarSpec {
  Vertex center = -1;
  std::vector<Vertex> x, u;     // length-1 rays and their anchors
  std::vector<Vertex> y, z, v;  // length-2 rays and their anchors
  std::size_t alpha() const { return x.size(); }
  std::size_t beta() const { return y.size(); }
};

/// alpha + beta >= 2, and alpha + 3 beta <= 9 or (alpha, beta) = (1, 3).
bool star_shape_admissible(std::size_t alpha, std::size_t beta);

/// Labels every star vertex so that all of them are satisfied. Anchors must be
/// labeled and the star vertices unlabeled. For alpha + beta >= 3 this is the
/// forbidden-pair construction; smaller stars are settled by exhaustive search
/// over the star's labels. Throws LemmaError for inadmissible shapes or when
/// no extension exists.
void extend_star(const Graph& g, PartialConfiguration& f, const StarSpec& s);

// ---------------------------------------------------------------------------
// Contracting three consecutive degree-2 vertices.

/// Labels for v1 v2 v3 given the labels of x and y in a configuration of the
/// contracted graph.
std::array<LabelPair, 3> contraction_lift(LabelPair fx, LabelPair fy);

/// One applied reduction, for replay logs.
struct ReductionStep {
  std::string rule;
  std::vector<Vertex> removed;  // ids in the graph the rule was applied to
  std::vector<Vertex> anchors;
};
using ReductionTrace = std::vector<ReductionStep>;

std::string to_string(const ReductionStep& step);

/// G with x v1 v2 v3 y replaced by the edge xy (kept if already present).
struct Contraction {
  Graph reduced;
  std::vector<Vertex> to_original;    // reduced id -> original id
  std::vector<Vertex> from_original;  // original id -> reduced id or -1
  std::array<Vertex, 5> path{};       // x v1 v2 v3 y in original ids
  bool edge_added = false;

  /// Extends a configuration of `reduced` to one of the original graph.
  Configuration lift(const Configuration& reduced_f) const;
  ReductionStep record() const;
};

/// Throws LemmaError unless x v1 v2 v3 y is a path with deg(v_i) = 2 and
/// x, y outside {v1, v2, v3}.
Contraction contract_degree2_path(const Graph& g, const std::array<Vertex, 5>& path);

// ---------------------------------------------------------------------------
// Tailed cycles.

struct TailedCycleLabels {
  std::vector<LabelPair> tail;   // u1..uk
  std::vector<LabelPair> cycle;  // w1..wm
};

/// Labels for a tail u1..uk from u0 into a cycle w1..wm entered at w1, given
/// f(u0) and the colors u0 is still missing (at most two). Every new vertex
/// and u0 end up satisfied.
TailedCycleLabels tailed_cycle_labels(LabelPair f_u0, LabelSet missing_u0, std::size_t k, std::size_t m);

/// Host-graph form. Every host vertex except possibly u0 must be satisfied and
/// u0 may miss at most two colors.
void extend_tailed_cycle(const Graph& g, PartialConfiguration& f, Vertex u0, std::span<const Vertex> tail,
                         std::span<const Vertex> cycle);

// ---------------------------------------------------------------------------
// One or two new vertices between labeled vertices.

/// New vertex v adjacent to x and y; requires fx != fy.
LabelPair one_vertex_label(LabelPair fx, LabelPair fy);
/// New path x-u-v-y; requires fx and fy to intersect. First valid pair of the
/// 100 (f(u), f(v)) candidates in lexicographic order.
std::pair<LabelPair, LabelPair> two_vertex_labels(LabelPair fx, LabelPair fy);

struct OneVertex {
  Vertex v, x, y;
};
struct TwoVertex {
  Vertex u, v, x, y;
};
void small_extend(const Graph& g, PartialConfiguration& f, const OneVertex& m);
void small_extend(const Graph& g, PartialConfiguration& f, const TwoVertex& m);

// ---------------------------------------------------------------------------
// Fixed small constructions. Graph layouts: cycles are numbered along the
// cycle; an attached or added path's vertices follow the base graph's ids.

/// Configuration of C_m for m >= 3 other than 4 and 7.
std::optional<Configuration> cycle_configuration(std::size_t m);

/// C_c (c in {5,6}) plus `path_vertices` (1 or 2) new vertices forming a path
/// between the nonadjacent cycle vertices a and b.
Graph cycle_with_added_path_graph(std::size_t c, std::size_t path_vertices, Vertex a, Vertex b);
Configuration cycle_with_added_path(std::size_t c, std::size_t path_vertices, Vertex a, Vertex b);

/// C5 hooked to a configured host through tails p (x to v1) and q (y to v3),
/// each of one or two vertices.
struct TwoTailedC5 {
  Vertex x = -1, y = -1;
  std::vector<Vertex> p, q;
  std::array<Vertex, 5> cycle{};
};
void add_c5_two_tails(const Graph& g, PartialConfiguration& f, const TwoTailedC5& s);

/// `base` plus a path of k vertices (ids base.size()..) with v1 ~ x, vk ~ y.
/// k = 0 means the single edge xy.
Graph attached_path_graph(const Graph& base, std::size_t k, Vertex x, Vertex y);

struct AttachResult {
  std::optional<Configuration> configuration;
  /// Set when the combined graph is one of the non-configurable graphs.
  std::optional<ExceptionalKind> refused;
};

/// Path of k >= 3 vertices attached to C_c at cycle vertices x and y. Returns
/// a configuration of attached_path_graph(cycle_graph(c), k, x, y) unless that
/// graph is C4.C4 or G1.
AttachResult attach_path_to_cycle(std::size_t c, std::size_t k, Vertex x, Vertex y);

/// Path of k vertices attached to the reference C4.C4 or K23 (see
/// reference_graph). k >= 2 when x == y; when x != y, k >= 0 and k = 0
/// requires x, y nonadjacent. Two attachments produce a non-configurable
/// graph and are refused: the edge u1w1 on C4.C4 (G3) and a two-vertex path
/// between degree-2 vertices of K23 (G2).
AttachResult attach_path_to_small(ExceptionalKind base, std::size_t k, Vertex x, Vertex y);

/// The configuration of K_{2,4} = complete_bipartite(2, 4).
Configuration k24_config();

// ---------------------------------------------------------------------------
// Orientation and joins.

/// arcs[i] = (tail, head); one arc per edge of the graph.
struct Orientation {
  std::vector<Edge> arcs;
};

/// Every vertex gets in-degree at least floor(deg / 2): pendant edges are
/// oriented toward the non-leaf end, and cycles are peeled and oriented
/// cyclically.
Orientation orient_min_indegree(const Graph& g);
std::vector<std::size_t> in_degrees(std::size_t n, const Orientation& o);

/// Joins two labeled parts through a path. f1 labels part 1 (satisfying all
/// of it except possibly v1), f2 likewise for part 2 and v2. `interior` lists
/// the path vertices strictly between v1 and v2; v1 == v2 with an empty
/// interior glues the parts at a shared vertex. Returns f1 together with a
/// relabeled copy of f2 and labels for the interior, satisfying v1, v2 and
/// the interior. Requires one end to miss at most one color and the other at
/// most two; throws LemmaError if no completion exists.
PartialConfiguration join_via_path(const Graph& g, const PartialConfiguration& f1, Vertex v1,
                                   const PartialConfiguration& f2, Vertex v2, std::span<const Vertex> interior);

/// Labels of the reference graph of `kind` (C4, C7, C4dotC4 or K23) that
/// satisfy every vertex except v, with v missing at most two colors (C4) or
/// at most one (the others). Computed once per (kind, v). Throws LemmaError
/// for G1..G4.
const Configuration& almost_satisfy_exceptional(ExceptionalKind kind, Vertex v);

}  // namespace sensorcfg
