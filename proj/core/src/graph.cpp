#include "sensorcfg/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>

namespace sensorcfg {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || idx(e.u) >= n || idx(e.v) >= n) {
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    g.adj_[idx(e.u)].push_back(e.v);
    g.adj_[idx(e.v)].push_back(e.u);
  }
  std::size_t degree_sum = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    degree_sum += list.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || idx(u) >= size() || idx(v) >= size()) return false;
  const auto& list = adj_[idx(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (idx(v) > u) out.push_back({static_cast<Vertex>(u), v});
    }
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  auto list = edges();
  list.push_back({u, v});
  return from_edges(size(), list);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  auto list = edges();
  std::erase_if(list, [&](const Edge& e) { return (e.u == u && e.v == v) || (e.u == v && e.v == u); });
  return from_edges(size(), list);
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

bool is_valid(const Graph& g) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto nbrs = g.neighbors(static_cast<Vertex>(v));
    if (!std::is_sorted(nbrs.begin(), nbrs.end())) return false;
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) return false;
    for (Vertex u : nbrs) {
      if (idx(u) == v) return false;
      if (!g.has_edge(u, static_cast<Vertex>(v))) return false;
    }
  }
  return true;
}

std::size_t min_degree(const Graph& g) {
  if (g.empty()) throw GraphError("min_degree of the empty graph");
  std::size_t best = g.degree(0);
  for (std::size_t v = 1; v < g.size(); ++v) best = std::min(best, g.degree(static_cast<Vertex>(v)));
  return best;
}

std::size_t max_degree(const Graph& g) {
  if (g.empty()) throw GraphError("max_degree of the empty graph");
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.size(); ++v) best = std::max(best, g.degree(static_cast<Vertex>(v)));
  return best;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.size(), 0);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[idx(u)]) {
          seen[idx(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Subgraph induced(const Graph& g, std::span<const Vertex> keep) {
  Subgraph out;
  out.from_parent.assign(g.size(), -1);
  out.to_parent.assign(keep.begin(), keep.end());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || idx(keep[i]) >= g.size()) throw GraphError("induced: vertex out of range");
    if (out.from_parent[idx(keep[i])] != -1) throw GraphError("induced: repeated vertex");
    out.from_parent[idx(keep[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex u : g.neighbors(keep[i])) {
      Vertex j = out.from_parent[idx(u)];
      if (j > static_cast<Vertex>(i)) edges.push_back({static_cast<Vertex>(i), j});
    }
  }
  out.graph = Graph::from_edges(keep.size(), edges);
  return out;
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> drop) {
  std::vector<char> gone(g.size(), 0);
  for (Vertex v : drop) gone[idx(v)] = 1;
  std::vector<Vertex> keep;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!gone[v]) keep.push_back(static_cast<Vertex>(v));
  }
  return induced(g, keep);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[idx(e.u)], perm[idx(e.v)]});
  return Graph::from_edges(g.size(), edges);
}

std::optional<std::vector<Vertex>> find_independent_neighbors(const Graph& g, Vertex center,
                                                              std::size_t leaves) {
  const auto nbrs = g.neighbors(center);
  if (nbrs.size() < leaves) return std::nullopt;
  std::vector<Vertex> chosen;
  // Depth-first over increasing positions; prune when too few candidates remain.
  std::function<bool(std::size_t)> grow = [&](std::size_t from) -> bool {
    if (chosen.size() == leaves) return true;
    for (std::size_t i = from; i < nbrs.size(); ++i) {
      if (nbrs.size() - i < leaves - chosen.size()) return false;
      Vertex cand = nbrs[i];
      bool independent = std::none_of(chosen.begin(), chosen.end(), [&](Vertex c) { return g.has_edge(c, cand); });
      if (!independent) continue;
      chosen.push_back(cand);
      if (grow(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (grow(0)) return chosen;
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_induced_star(const Graph& g, std::size_t leaves) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (auto found = find_independent_neighbors(g, static_cast<Vertex>(v), leaves)) {
      std::vector<Vertex> witness{static_cast<Vertex>(v)};
      witness.insert(witness.end(), found->begin(), found->end());
      return witness;
    }
  }
  return std::nullopt;
}

bool is_k1s_free(const Graph& g, std::size_t leaves) { return !find_induced_star(g, leaves).has_value(); }

bool is_k16_free(const Graph& g) { return is_k1s_free(g, 6); }

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
  return Graph::from_edges(a + b, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    edges.push_back({i, static_cast<Vertex>(i + 5)});
    edges.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});
  }
  return Graph::from_edges(10, edges);
}

Graph subdivide(const Graph& g) {
  std::vector<Edge> edges;
  Vertex next = static_cast<Vertex>(g.size());
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, next});
    edges.push_back({next, e.v});
    ++next;
  }
  return Graph::from_edges(static_cast<std::size_t>(next), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.size());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(a.size() + b.size(), edges);
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<std::size_t> da(n), db(n);
  for (std::size_t v = 0; v < n; ++v) {
    da[v] = a.degree(static_cast<Vertex>(v));
    db[v] = b.degree(static_cast<Vertex>(v));
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Map the vertices of `a` in BFS order so each new vertex usually has an
  // already-mapped neighbor constraining it.
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (placed[s]) continue;
    placed[s] = 1;
    std::size_t head = order.size();
    order.push_back(static_cast<Vertex>(s));
    while (head < order.size()) {
      Vertex v = order[head++];
      for (Vertex u : a.neighbors(v)) {
        if (!placed[idx(u)]) {
          placed[idx(u)] = 1;
          order.push_back(u);
        }
      }
    }
  }
  std::vector<Vertex> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    Vertex v = order[i];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || db[w] != da[idx(v)]) continue;
      bool consistent = true;
      for (std::size_t j = 0; j < i && consistent; ++j) {
        Vertex u = order[j];
        if (a.has_edge(u, v) != b.has_edge(map[idx(u)], static_cast<Vertex>(w))) consistent = false;
      }
      if (!consistent) continue;
      map[idx(v)] = static_cast<Vertex>(w);
      used[w] = 1;
      if (extend(i + 1)) return true;
      used[w] = 0;
      map[idx(v)] = -1;
    }
    return false;
  };
  if (extend(0)) return map;
  return std::nullopt;
}

std::string_view to_string(ExceptionalKind kind) {
  switch (kind) {
    case ExceptionalKind::C4: return "C4";
    case ExceptionalKind::C7: return "C7";
    case ExceptionalKind::C4dotC4: return "C4dotC4";
    case ExceptionalKind::K23: return "K23";
    case ExceptionalKind::G1: return "G1";
    case ExceptionalKind::G2: return "G2";
    case ExceptionalKind::G3: return "G3";
    case ExceptionalKind::G4: return "G4";
  }
  return "?";
}

std::optional<ExceptionalKind> exceptional_kind_from_string(std::string_view name) {
  for (ExceptionalKind k : kAllExceptionalKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

// Outer cycle t-l3-l2-l1-r1-r2-r3-t with t=0, l3=1, l2=2, l1=3, r1=4, r2=5, r3=6.
constexpr Vertex kT = 0, kL3 = 1, kL2 = 2, kL1 = 3, kR1 = 4, kR2 = 5, kR3 = 6;

Graph seven_cycle_with(std::initializer_list<Edge> chords) {
  std::vector<Edge> edges{{kT, kL3}, {kL3, kL2}, {kL2, kL1}, {kL1, kR1}, {kR1, kR2}, {kR2, kR3}, {kR3, kT}};
  edges.insert(edges.end(), chords.begin(), chords.end());
  return Graph::from_edges(7, edges);
}

std::array<Graph, 8> make_references() {
  return {
      cycle_graph(4),
      cycle_graph(7),
      build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}}),
      complete_bipartite(2, 3),
      seven_cycle_with({{kL2, kR2}}),
      seven_cycle_with({{kL3, kR2}, {kL2, kR3}}),
      seven_cycle_with({{kT, kL1}, {kT, kR1}}),
      seven_cycle_with({{kL3, kR2}, {kL2, kR3}, {kL2, kR2}}),
  };
}

}  // namespace

const Graph& reference_graph(ExceptionalKind kind) {
  static const std::array<Graph, 8> refs = make_references();
  return refs[static_cast<std::size_t>(kind)];
}

std::optional<ExceptionalKind> detect_exceptional(const Graph& g) {
  if (!is_connected(g)) throw GraphError("detect_exceptional requires a connected graph");
  if (g.size() != 4 && g.size() != 5 && g.size() != 7) return std::nullopt;
  for (ExceptionalKind k : kAllExceptionalKinds) {
    if (are_isomorphic(g, reference_graph(k))) return k;
  }
  return std::nullopt;
}

Graph generate_rdisk(const PointSet& ps) {
  if (!(ps.radius > 0.0)) throw GraphError("R-disk radius must be positive");
  std::vector<Edge> edges;
  const auto& pts = ps.points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y) <= ps.radius) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  return Graph::from_edges(pts.size(), edges);
}

}  // namespace sensorcfg
