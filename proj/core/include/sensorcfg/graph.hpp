#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sensorcfg {

using Vertex = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite simple undirected graph on the dense vertex set 0..n-1.
///
/// Adjacency lists are kept sorted and duplicate-free, so `neighbors(v)` is a
/// set in increasing order. Instances are immutable; every derived graph
/// (induced subgraphs, contractions, edge edits) is a new value.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds a graph with exactly the given edges. Duplicate pairs (in either
  /// orientation) collapse to one edge. Throws GraphError on an endpoint
  /// outside 0..n-1 or a self-loop.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return adj_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);
inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Checks loop-freeness and adjacency symmetry. Graph's constructor already
/// guarantees both; this exists so generators can be audited independently.
bool is_valid(const Graph& g);

std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);

/// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

/// Induced subgraph together with the id tables needed to lift results back.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // new id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> new id, or -1
};

/// `keep` may be in any order; new ids follow the order given.
Subgraph induced(const Graph& g, std::span<const Vertex> keep);
Subgraph remove_vertices(const Graph& g, std::span<const Vertex> drop);

/// Applies `perm` (old id -> new id) to every vertex.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Searches N(center) for `leaves` pairwise non-adjacent vertices. Returns
/// them in increasing order if found.
std::optional<std::vector<Vertex>> find_independent_neighbors(const Graph& g, Vertex center,
                                                              std::size_t leaves);

/// Witness of an induced K_{1,s}: the center followed by s leaves.
std::optional<std::vector<Vertex>> find_induced_star(const Graph& g, std::size_t leaves);
bool is_k1s_free(const Graph& g, std::size_t leaves);
bool is_k16_free(const Graph& g);

// Named graphs. Cycles and paths are numbered along the cycle/path.
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Parts are 0..a-1 and a..a+b-1.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen_graph();
/// Every edge replaced by a path of length two; new vertices follow the
/// originals in `g.edges()` order.
Graph subdivide(const Graph& g);
/// Disjoint union; vertices of `b` are shifted by a.size().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Isomorphism search by degree filtering plus backtracking. Intended for the
/// small fixed graphs this library compares against; it is exponential in the
/// worst case. The result maps each vertex of `a` to a vertex of `b`.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);
inline bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

// ---------------------------------------------------------------------------
// Exceptional graphs

enum class ExceptionalKind { C4, C7, C4dotC4, K23, G1, G2, G3, G4 };

inline constexpr ExceptionalKind kAllExceptionalKinds[] = {
    ExceptionalKind::C4,  ExceptionalKind::C7, ExceptionalKind::C4dotC4, ExceptionalKind::K23,
    ExceptionalKind::G1, ExceptionalKind::G2, ExceptionalKind::G3,      ExceptionalKind::G4};

std::string_view to_string(ExceptionalKind kind);
std::optional<ExceptionalKind> exceptional_kind_from_string(std::string_view name);

/// Reference graph for each kind.
///
/// C4 and C7 are numbered along the cycle. C4dotC4 is 0 = shared vertex,
/// cycles 0-1-2-3-0 and 0-4-5-6-0. K23 has parts {0,1} and {2,3,4}.
/// G1..G4 share the outer cycle t-l3-l2-l1-r1-r2-r3-t numbered 0..6 in that
/// order (t=0, l3=1, l2=2, l1=3, r1=4, r2=5, r3=6) and add the chords
///   G1: l2r2;  G2: l3r2, l2r3;  G3: t l1, t r1;  G4: l3r2, l2r3, l2r2.
const Graph& reference_graph(ExceptionalKind kind);

/// Exact isomorphism test against the eight references. Throws GraphError if
/// `g` is disconnected.
std::optional<ExceptionalKind> detect_exceptional(const Graph& g);

// ---------------------------------------------------------------------------
// R-disk graphs

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct PointSet {
  std::vector<Point> points;
  double radius = 1.0;
};

/// Vertex i is points[i]; i ~ j iff the Euclidean distance is at most the
/// radius. Throws GraphError if radius <= 0.
Graph generate_rdisk(const PointSet& ps);

}  // namespace sensorcfg
