// Paths attached to cycles, C4.C4 and K23.
//
// A cycle with a path attached at x != y is a theta graph: three internally
// disjoint x-y paths. With x == y it is two cycles sharing x. Both shapes are
// labeled by picking two branches that form a cycle of configurable length
// and hanging the remaining branch off it; the few shapes where no such
// choice exists use fixed tables.

#include <algorithm>
#include <numeric>

#include "detail.hpp"
#include "sensorcfg/lemmas.hpp"
#include "sensorcfg/oracle.hpp"

namespace sensorcfg {

namespace {

using detail::idx;

LabelPair P(int code) { return LabelPair(code / 10, code % 10); }

bool good_cycle_length(std::size_t len) { return len >= 3 && len != 4 && len != 7; }

struct Shape {
  Vertex x = -1, y = -1;
  // Branches ordered from x. For x == y they are loops back to x.
  std::vector<std::vector<Vertex>> branches;
};

struct ShapeTable {
  int fx, fy;
  std::vector<std::vector<int>> branches;
};

// Shapes with no configurable spanning cycle plus hanging branch.
const ShapeTable kThetaTables[] = {
    {12, 34, {{35}, {25}, {14, 35, 25, 14}}},
    {12, 34, {{34, 35, 12, 45}, {35}, {15, 34, 25, 12}}},
    {12, 12, {{13, 45, 23}, {34, 45}, {15, 34, 25}}},
};
const ShapeTable kLoopTable = {12, 12, {{34, 15, 23, 14, 25, 34}, {15, 34, 25}}};

void place_cycle(PartialConfiguration& f, const std::vector<Vertex>& order) {
  const auto cfg = cycle_configuration(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) f.assign(order[i], (*cfg)[static_cast<Vertex>(i)]);
}

// Labels a branch from x to y given f(x), f(y).
bool hang_branch(PartialConfiguration& f, Vertex x, Vertex y, const std::vector<Vertex>& br) {
  const LabelPair fx = f.at(x);
  const LabelPair fy = f.at(y);
  switch (br.size()) {
    case 0:
      return true;
    case 1:
      if (fx == fy) return false;
      f.assign(br[0], one_vertex_label(fx, fy));
      return true;
    case 2: {
      if ((fx.set() & fy.set()).empty()) return false;
      const auto [a, b] = two_vertex_labels(fx, fy);
      f.assign(br[0], a);
      f.assign(br[1], b);
      return true;
    }
    default: {
      const auto labels = attached_path_labels(fx, fy, br.size());
      for (std::size_t i = 0; i < br.size(); ++i) f.assign(br[i], labels[i]);
      return true;
    }
  }
}

std::vector<Vertex> reversed(std::vector<Vertex> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

bool valid(const Graph& g, const PartialConfiguration& f) {
  return f.is_complete() && verify(g, Configuration(f)).empty();
}

std::optional<PartialConfiguration> apply_table(const Graph& g, const Shape& s, const ShapeTable& t) {
  const std::size_t nb = s.branches.size();
  if (t.branches.size() != nb) return std::nullopt;
  std::vector<std::size_t> perm(nb);
  std::iota(perm.begin(), perm.end(), 0);
  const bool loops = s.x == s.y;
  do {
    // Theta: one global flip swaps x and y. Loops: each loop may be reversed.
    const unsigned flips = loops ? (1U << nb) : 2U;
    for (unsigned mask = 0; mask < flips; ++mask) {
      PartialConfiguration f(g.size());
      bool fits = true;
      const bool swap_ends = !loops && mask == 1;
      f.assign(s.x, P(swap_ends ? t.fy : t.fx));
      if (!loops) f.assign(s.y, P(swap_ends ? t.fx : t.fy));
      for (std::size_t b = 0; b < nb && fits; ++b) {
        const auto& codes = t.branches[perm[b]];
        if (codes.size() != s.branches[b].size()) {
          fits = false;
          break;
        }
        const bool rev = loops ? ((mask >> b) & 1U) != 0 : swap_ends;
        for (std::size_t i = 0; i < codes.size(); ++i) {
          f.assign(s.branches[b][rev ? codes.size() - 1 - i : i], P(codes[i]));
        }
      }
      if (fits && valid(g, f)) return f;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<PartialConfiguration> label_shape(const Graph& g, const Shape& s);

// Drops the first three vertices of a long branch, solves the rest and lifts.
std::optional<PartialConfiguration> label_by_contraction(const Graph& g, const Shape& s, std::size_t b) {
  const auto& br = s.branches[b];
  const Vertex end = s.x == s.y ? s.x : s.y;
  const std::array<Vertex, 3> drop{br[0], br[1], br[2]};
  Subgraph sub = remove_vertices(g, drop);
  Graph reduced = sub.graph.with_edge(sub.from_parent[idx(s.x)], sub.from_parent[idx(br[3])]);
  Shape rs;
  rs.x = sub.from_parent[idx(s.x)];
  rs.y = sub.from_parent[idx(end)];
  for (const auto& other : s.branches) {
    std::vector<Vertex> mapped;
    for (Vertex v : other) {
      if (sub.from_parent[idx(v)] >= 0) mapped.push_back(sub.from_parent[idx(v)]);
    }
    rs.branches.push_back(std::move(mapped));
  }
  auto rf = label_shape(reduced, rs);
  if (!rf) return std::nullopt;
  PartialConfiguration f(g.size());
  for (std::size_t r = 0; r < sub.to_parent.size(); ++r) f.assign(sub.to_parent[r], rf->at(static_cast<Vertex>(r)));
  const auto three = contraction_lift(f.at(s.x), f.at(br[3]));
  for (std::size_t i = 0; i < 3; ++i) f.assign(br[i], three[i]);
  return f;
}

std::optional<PartialConfiguration> label_shape(const Graph& g, const Shape& s) {
  const auto& br = s.branches;
  if (s.x != s.y) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        const std::size_t t = 3 - i - j;
        std::vector<Vertex> order{s.x};
        order.insert(order.end(), br[i].begin(), br[i].end());
        order.push_back(s.y);
        const auto back = reversed(br[j]);
        order.insert(order.end(), back.begin(), back.end());
        if (!good_cycle_length(order.size())) continue;
        PartialConfiguration f(g.size());
        place_cycle(f, order);
        if (hang_branch(f, s.x, s.y, br[t]) && valid(g, f)) return f;
      }
    }
    // Twin branches of equal length copy each other's labels.
    for (std::size_t t = 0; t < 3; ++t) {
      for (std::size_t sb = 0; sb < 3; ++sb) {
        if (sb == t || br[t].size() != br[sb].size() || br[t].empty()) continue;
        const std::size_t r = 3 - t - sb;
        std::vector<Vertex> order{s.x};
        order.insert(order.end(), br[sb].begin(), br[sb].end());
        order.push_back(s.y);
        const auto back = reversed(br[r]);
        order.insert(order.end(), back.begin(), back.end());
        if (!good_cycle_length(order.size())) continue;
        PartialConfiguration f(g.size());
        place_cycle(f, order);
        for (std::size_t i = 0; i < br[t].size(); ++i) f.assign(br[t][i], f.at(br[sb][i]));
        if (valid(g, f)) return f;
      }
    }
    for (const auto& table : kThetaTables) {
      if (auto f = apply_table(g, s, table)) return f;
    }
  } else {
    for (std::size_t i = 0; i < br.size(); ++i) {
      std::vector<Vertex> order{s.x};
      order.insert(order.end(), br[i].begin(), br[i].end());
      if (!good_cycle_length(order.size())) continue;
      PartialConfiguration f(g.size());
      place_cycle(f, order);
      bool ok = true;
      for (std::size_t j = 0; j < br.size() && ok; ++j) {
        if (j != i) ok = hang_branch(f, s.x, s.x, br[j]);
      }
      if (ok && valid(g, f)) return f;
    }
    if (auto f = apply_table(g, s, kLoopTable)) return f;
  }
  // A long branch can be shortened by three without creating C4.C4.
  for (std::size_t b = 0; b < br.size(); ++b) {
    if (br[b].size() < 6) continue;
    if (s.x == s.y && br.size() == 2 && br[b].size() == 6 && br[1 - b].size() == 3) continue;
    if (auto f = label_by_contraction(g, s, b)) return f;
  }
  return std::nullopt;
}

}  // namespace

Graph attached_path_graph(const Graph& base, std::size_t k, Vertex x, Vertex y) {
  const auto n = static_cast<Vertex>(base.size());
  if (x < 0 || x >= n || y < 0 || y >= n) throw LemmaError("attachment vertex out of range");
  std::vector<Edge> edges = base.edges();
  if (k == 0) {
    if (x == y || base.has_edge(x, y)) throw LemmaError("a path with no vertices needs nonadjacent distinct ends");
    edges.push_back({x, y});
    return Graph::from_edges(base.size(), edges);
  }
  if (x == y && k < 2) throw LemmaError("a closed attachment needs at least two path vertices");
  const auto kk = static_cast<Vertex>(k);
  edges.push_back({x, n});
  for (Vertex i = 0; i + 1 < kk; ++i) edges.push_back({n + i, n + i + 1});
  edges.push_back({n + kk - 1, y});
  return Graph::from_edges(base.size() + k, edges);
}

AttachResult attach_path_to_cycle(std::size_t c, std::size_t k, Vertex x, Vertex y) {
  if (c < 3) throw LemmaError("cycles have at least three vertices");
  if (k < 3) throw LemmaError("attached path needs at least three vertices");
  const auto cc = static_cast<Vertex>(c);
  if (x < 0 || x >= cc || y < 0 || y >= cc) throw LemmaError("attachment vertex not on the cycle");
  const Graph g = attached_path_graph(cycle_graph(c), k, x, y);
  AttachResult res;
  if (g.size() == 7) {
    if (auto kind = detect_exceptional(g)) {
      res.refused = kind;
      return res;
    }
  }
  Shape s;
  s.x = x;
  s.y = y;
  std::vector<Vertex> path(k);
  std::iota(path.begin(), path.end(), cc);
  if (x == y) {
    std::vector<Vertex> loop;
    for (Vertex i = 1; i < cc; ++i) loop.push_back((x + i) % cc);
    s.branches = {loop, path};
  } else {
    std::vector<Vertex> fwd, bwd;
    for (Vertex v = (x + 1) % cc; v != y; v = (v + 1) % cc) fwd.push_back(v);
    for (Vertex v = (x + cc - 1) % cc; v != y; v = (v + cc - 1) % cc) bwd.push_back(v);
    s.branches = {fwd, bwd, path};
  }
  if (auto f = label_shape(g, s)) {
    res.configuration = Configuration(*f);
    return res;
  }
  // Only the chord shape of G1 is left, and it is caught above.
  if (auto f = detail::exact_configuration(g)) {
    res.configuration = std::move(f);
    return res;
  }
  throw std::logic_error("attach_path_to_cycle: unexpected non-configurable graph");
}

// ---------------------------------------------------------------------------

namespace {

struct SmallTable {
  ExceptionalKind base;
  Vertex x, y;
  std::vector<int> base_labels;
  std::vector<int> path_labels;
};

// C4.C4: 0 = v, 1..3 = u1..u3, 4..6 = w1..w3. K23: 0, 1 = u1, u2; 2..4 = w.
const SmallTable kSmallTables[] = {
    {ExceptionalKind::C4dotC4, 2, 2, {34, 45, 12, 25, 13, 25, 14}, {13, 45, 23}},
    {ExceptionalKind::C4dotC4, 0, 0, {12, 13, 45, 23, 15, 34, 25}, {14, 35, 24}},
    {ExceptionalKind::C4dotC4, 0, 2, {12, 45, 34, 15, 13, 45, 23}, {25}},
    {ExceptionalKind::K23, 0, 1, {12, 34, 15, 15, 15}, {}},
};

const std::vector<std::vector<Vertex>>& base_automorphisms(ExceptionalKind kind) {
  static const std::vector<std::vector<Vertex>> c4c4 = detail::automorphisms(reference_graph(ExceptionalKind::C4dotC4));
  static const std::vector<std::vector<Vertex>> k23 = detail::automorphisms(reference_graph(ExceptionalKind::K23));
  return kind == ExceptionalKind::K23 ? k23 : c4c4;
}

std::optional<Configuration> small_from_table(ExceptionalKind base, std::size_t k, Vertex x, Vertex y) {
  const Graph& b = reference_graph(base);
  const Graph g = attached_path_graph(b, k, x, y);
  const std::size_t n = b.size();
  for (const auto& t : kSmallTables) {
    if (t.base != base || t.path_labels.size() != k) continue;
    for (const auto& phi : base_automorphisms(base)) {
      for (int swap = 0; swap < 2; ++swap) {
        const Vertex px = phi[idx(swap ? y : x)];
        const Vertex py = phi[idx(swap ? x : y)];
        if (px != t.x || py != t.y) continue;
        PartialConfiguration f(g.size());
        for (std::size_t v = 0; v < n; ++v) f.assign(static_cast<Vertex>(v), P(t.base_labels[idx(phi[v])]));
        for (std::size_t i = 0; i < k; ++i) {
          f.assign(static_cast<Vertex>(n + i), P(t.path_labels[swap ? k - 1 - i : i]));
        }
        Configuration cfg(f);
        if (!verify(g, cfg).empty()) throw std::logic_error("small attachment table does not verify");
        return cfg;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

AttachResult attach_path_to_small(ExceptionalKind base, std::size_t k, Vertex x, Vertex y) {
  if (base != ExceptionalKind::C4dotC4 && base != ExceptionalKind::K23) {
    throw LemmaError("base must be C4.C4 or K23");
  }
  const Graph& b = reference_graph(base);
  const Graph full = attached_path_graph(b, k, x, y);
  const std::size_t n = b.size();
  AttachResult res;
  if (full.size() == 7) {
    if (auto kind = detect_exceptional(full)) {
      res.refused = kind;
      return res;
    }
  }

  // Shorten the path by threes while the shorter graph stays valid and
  // configurable.
  const std::size_t min_k = x == y ? 2 : (b.has_edge(x, y) ? 1 : 0);
  std::size_t kr = k;
  while (kr >= min_k + 3) {
    const Graph shorter = attached_path_graph(b, kr - 3, x, y);
    if (shorter.size() == 7 && detect_exceptional(shorter)) break;
    kr -= 3;
  }
  std::optional<Configuration> small = small_from_table(base, kr, x, y);
  if (!small) small = detail::exact_configuration(attached_path_graph(b, kr, x, y));
  if (!small) throw std::logic_error("attach_path_to_small: base case not configurable");

  // Lift: each round inserts three vertices right after x.
  std::vector<LabelPair> path;
  for (std::size_t i = 0; i < kr; ++i) path.push_back((*small)[static_cast<Vertex>(n + i)]);
  const LabelPair fx = (*small)[x];
  const LabelPair fy = (*small)[y];
  while (path.size() < k) {
    const auto three = contraction_lift(fx, path.empty() ? fy : path.front());
    path.insert(path.begin(), three.begin(), three.end());
  }
  PartialConfiguration f(full.size());
  for (std::size_t v = 0; v < n; ++v) f.assign(static_cast<Vertex>(v), (*small)[static_cast<Vertex>(v)]);
  for (std::size_t i = 0; i < k; ++i) f.assign(static_cast<Vertex>(n + i), path[i]);
  Configuration cfg(f);
  if (!verify(full, cfg).empty()) throw std::logic_error("attach_path_to_small: lift failed");
  res.configuration = std::move(cfg);
  return res;
}

}  // namespace sensorcfg
