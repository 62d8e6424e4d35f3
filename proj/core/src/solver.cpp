#include "sensorcfg/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "detail.hpp"
#include "sensorcfg/oracle.hpp"

namespace sensorcfg {

namespace {

using detail::idx;

constexpr LabelSet kFull = LabelSet::full();

bool is_sparse_kind(ExceptionalKind k) {
  return k == ExceptionalKind::C4 || k == ExceptionalKind::C7 || k == ExceptionalKind::C4dotC4 ||
         k == ExceptionalKind::K23;
}

std::vector<Vertex> compose(const std::vector<Vertex>& root, const std::vector<Vertex>& to_parent) {
  std::vector<Vertex> out(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i) out[i] = root[idx(to_parent[i])];
  return out;
}

std::vector<Vertex> identity(std::size_t n) {
  std::vector<Vertex> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

void place(PartialConfiguration& f, const std::vector<Vertex>& to_parent, const Configuration& c) {
  for (std::size_t i = 0; i < to_parent.size(); ++i) f.assign(to_parent[i], c[static_cast<Vertex>(i)]);
}

// True if some component of g is one of the eight non-configurable graphs.
bool has_exceptional_component(const Graph& g) {
  for (const auto& comp : components(g)) {
    if (comp.size() != 4 && comp.size() != 5 && comp.size() != 7) continue;
    if (detect_exceptional(induced(g, comp).graph)) return true;
  }
  return false;
}

// Vertices of a cycle graph in cyclic order starting at `start`.
std::vector<Vertex> cycle_order(const Graph& g, Vertex start) {
  std::vector<Vertex> out{start};
  Vertex prev = start;
  Vertex cur = g.neighbors(start)[0];
  while (cur != start) {
    out.push_back(cur);
    const auto nb = g.neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return out;
}

struct CutStructure {
  std::vector<Vertex> articulation;
  std::vector<Edge> bridges;
};

CutStructure cut_structure(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> disc(n, -1), low(n, 0);
  CutStructure out;
  int clock = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[idx(v)] = low[idx(v)] = clock++;
    int children = 0;
    bool cut = false;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[idx(w)] >= 0) {
        low[idx(v)] = std::min(low[idx(v)], disc[idx(w)]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[idx(v)] = std::min(low[idx(v)], low[idx(w)]);
      if (parent >= 0 && low[idx(w)] >= disc[idx(v)]) cut = true;
      if (low[idx(w)] > disc[idx(v)]) out.bridges.push_back({std::min(v, w), std::max(v, w)});
    }
    if (parent < 0 && children > 1) cut = true;
    if (cut) out.articulation.push_back(v);
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(static_cast<Vertex>(v), -1);
  }
  std::sort(out.articulation.begin(), out.articulation.end());
  std::sort(out.bridges.begin(), out.bridges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  return out;
}

// The 12-vertex graph made of C7 and a (2,1)-star, with its configuration.
const Graph& star_on_c7_graph() {
  static const Graph g = build_graph(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0},
                                          {7, 8}, {7, 9}, {7, 10}, {10, 11}, {8, 0}, {9, 4}, {11, 2}});
  return g;
}

const Configuration& star_on_c7_config() {
  static const Configuration f = make_configuration(
      {{1, 2}, {4, 5}, {1, 3}, {4, 5}, {1, 2}, {3, 4}, {3, 5}, {1, 3}, {4, 5}, {4, 5}, {2, 5}, {2, 4}});
  return f;
}

std::optional<Configuration> exact_or_gap(const Graph& g, std::uint64_t nodes) {
  OracleBudget budget;
  budget.node_limit = nodes;
  const OracleResult r = exact_solve(g, budget);
  if (r.outcome == OracleOutcome::Configurable) return r.configuration;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

class Engine {
 public:
  explicit Engine(ReductionTrace& trace) : trace_(trace) {}

  // Connected sparse graph; nullopt iff it is C4, C7, C4.C4 or K23.
  std::optional<Configuration> sparse(const Graph& g, const std::vector<Vertex>& root);
  // Connected, min degree >= 2, K_{1,6}-free, not exceptional.
  Configuration general(const Graph& g, const std::vector<Vertex>& root);

 private:
  void note(std::string rule, std::vector<Vertex> removed, std::vector<Vertex> anchors,
            const std::vector<Vertex>& root) {
    for (auto& v : removed) v = root[idx(v)];
    for (auto& v : anchors) v = root[idx(v)];
    trace_.push_back({std::move(rule), std::move(removed), std::move(anchors)});
  }

  // Labels of a part (configured, or near-configured at `end` if exceptional).
  Configuration part_labels(const Graph& part, const std::vector<Vertex>& root, Vertex end);

  Configuration checked(const Graph& g, Configuration f, const char* rule) {
    if (!verify(g, f).empty()) throw SolverGap(std::string(rule) + ": assembled labels do not verify");
    return f;
  }

  std::optional<Configuration> split(const Graph& g, const std::vector<Vertex>& root);
  std::optional<Configuration> split_bridge(const Graph& g, const std::vector<Vertex>& root, Edge bridge);
  std::optional<Configuration> split_vertex(const Graph& g, const std::vector<Vertex>& root, Vertex cut);
  std::optional<Configuration> twin_c4(const Graph& g, const std::vector<Vertex>& root);
  std::optional<Configuration> long_path(const Graph& g, const std::vector<Vertex>& root);
  std::optional<Configuration> star(const Graph& g, const std::vector<Vertex>& root);
  std::optional<Configuration> diagonal_c6(const Graph& g, const std::vector<Vertex>& root);
  std::optional<Configuration> base(const Graph& g, const std::vector<Vertex>& root);

  std::optional<Configuration> opening(const Graph& g, const std::vector<Vertex>& root);
  Configuration glue(const Graph& g, const Graph& sparse_g, const std::vector<Vertex>& root);

  ReductionTrace& trace_;
};

Configuration near_configuration(const Graph& g, Vertex end) {
  const auto kind = detect_exceptional(g);
  if (!kind || !is_sparse_kind(*kind)) throw SolverGap("near-configuration requested for a configurable part");
  const auto iso = find_isomorphism(g, reference_graph(*kind));
  if (!iso) throw std::logic_error("exceptional graph without isomorphism");
  const Configuration& ref = almost_satisfy_exceptional(*kind, (*iso)[idx(end)]);
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(ref[(*iso)[i]]);
  return Configuration(std::move(out));
}

Configuration Engine::part_labels(const Graph& part, const std::vector<Vertex>& root, Vertex end) {
  if (auto f = sparse(part, root)) return *f;
  return near_configuration(part, end);
}

std::optional<Configuration> Engine::sparse(const Graph& g, const std::vector<Vertex>& root) {
  if (auto k = detect_exceptional(g)) {
    if (is_sparse_kind(*k)) return std::nullopt;
    throw SolverGap("sparse instance isomorphic to " + std::string(to_string(*k)));
  }
  if (g.size() == 12) {
    if (auto iso = find_isomorphism(g, star_on_c7_graph())) {
      std::vector<LabelPair> out;
      for (std::size_t i = 0; i < g.size(); ++i) out.push_back(star_on_c7_config()[(*iso)[i]]);
      note("star-on-c7", {}, {}, root);
      return checked(g, Configuration(std::move(out)), "star-on-c7");
    }
  }
  if (g.size() <= 7) {
    auto f = detail::exact_configuration(g);
    if (!f) throw SolverGap("small sparse instance not configurable");
    note("exact-small", {}, {}, root);
    return f;
  }
  if (max_degree(g) == 2) {
    const auto order = cycle_order(g, 0);
    const auto c = cycle_configuration(g.size());
    PartialConfiguration out(g.size());
    for (std::size_t i = 0; i < order.size(); ++i) out.assign(order[i], (*c)[static_cast<Vertex>(i)]);
    note("cycle", {}, {}, root);
    return checked(g, Configuration(out), "cycle");
  }
  using Rule = std::optional<Configuration> (Engine::*)(const Graph&, const std::vector<Vertex>&);
  for (Rule rule : {&Engine::split, &Engine::twin_c4, &Engine::long_path, &Engine::star, &Engine::diagonal_c6,
                    &Engine::base}) {
    if (auto f = (this->*rule)(g, root)) return f;
  }
  if (g.size() <= 24) {
    if (auto f = exact_or_gap(g, 20'000'000)) {
      note("exact-fallback", {}, {}, root);
      return f;
    }
  }
  throw SolverGap("no rule applies to a sparse instance on " + std::to_string(g.size()) + " vertices");
}

// --- 2-connectivity ---------------------------------------------------------

std::optional<Configuration> Engine::split(const Graph& g, const std::vector<Vertex>& root) {
  const auto cs = cut_structure(g);
  for (const Edge& b : cs.bridges) {
    if (auto f = split_bridge(g, root, b)) return f;
  }
  if (!cs.bridges.empty()) return std::nullopt;
  for (Vertex v : cs.articulation) {
    if (auto f = split_vertex(g, root, v)) return f;
  }
  return std::nullopt;
}

std::optional<Configuration> Engine::split_bridge(const Graph& g, const std::vector<Vertex>& root, Edge bridge) {
  std::vector<Vertex> chain{bridge.u, bridge.v};
  auto other = [&](Vertex v, Vertex not_this) {
    const auto nb = g.neighbors(v);
    return nb[0] == not_this ? nb[1] : nb[0];
  };
  while (g.degree(chain.front()) == 2) chain.insert(chain.begin(), other(chain.front(), chain[1]));
  while (g.degree(chain.back()) == 2) chain.push_back(other(chain.back(), chain[chain.size() - 2]));
  const Vertex a = chain.front();
  const Vertex b = chain.back();
  const std::vector<Vertex> interior(chain.begin() + 1, chain.end() - 1);

  Graph rest = interior.empty() ? g.without_edge(a, b) : g;
  std::vector<Vertex> side_a, side_b;
  const Subgraph without = remove_vertices(rest, interior);
  for (const auto& comp : components(without.graph)) {
    std::vector<Vertex> ids;
    for (Vertex v : comp) ids.push_back(without.to_parent[idx(v)]);
    if (std::find(ids.begin(), ids.end(), a) != ids.end()) side_a = ids;
    if (std::find(ids.begin(), ids.end(), b) != ids.end()) side_b = ids;
  }
  std::sort(side_a.begin(), side_a.end());
  std::sort(side_b.begin(), side_b.end());
  const Subgraph A = induced(rest, side_a);
  const Subgraph B = induced(rest, side_b);
  const Configuration fa = part_labels(A.graph, compose(root, A.to_parent), A.from_parent[idx(a)]);
  const Configuration fb = part_labels(B.graph, compose(root, B.to_parent), B.from_parent[idx(b)]);
  PartialConfiguration f1(g.size()), f2(g.size());
  place(f1, A.to_parent, fa);
  place(f2, B.to_parent, fb);
  try {
    PartialConfiguration out = join_via_path(g, f1, a, f2, b, interior);
    note("bridge-join", interior, {a, b}, root);
    return checked(g, Configuration(out), "bridge-join");
  } catch (const LemmaError&) {
  }
  // Two near-configured cycles-or-parts: run a tail into a cycle side instead.
  auto tail_into = [&](const PartialConfiguration& fh, Vertex u0, const Subgraph& cyc,
                       Vertex w1, std::vector<Vertex> tail) -> std::optional<Configuration> {
    if (max_degree(cyc.graph) != 2) return std::nullopt;
    std::vector<Vertex> order;
    for (Vertex v : cycle_order(cyc.graph, cyc.from_parent[idx(w1)])) order.push_back(cyc.to_parent[idx(v)]);
    PartialConfiguration f = fh;
    try {
      extend_tailed_cycle(g, f, u0, tail, order);
    } catch (const LemmaError&) {
      return std::nullopt;
    }
    note("tailed-cycle", tail, {u0}, root);
    return checked(g, Configuration(f), "tailed-cycle");
  };
  if (auto f = tail_into(f1, a, B, b, interior)) return f;
  std::vector<Vertex> reversed(interior.rbegin(), interior.rend());
  return tail_into(f2, b, A, a, reversed);
}

std::optional<Configuration> Engine::split_vertex(const Graph& g, const std::vector<Vertex>& root, Vertex cut) {
  const Subgraph without = remove_vertices(g, std::vector<Vertex>{cut});
  const auto comps = components(without.graph);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::vector<Vertex> one{cut}, rest{cut};
    for (std::size_t j = 0; j < comps.size(); ++j) {
      for (Vertex v : comps[j]) (j == i ? one : rest).push_back(without.to_parent[idx(v)]);
    }
    std::sort(one.begin(), one.end());
    std::sort(rest.begin(), rest.end());
    const Subgraph A = induced(g, one);
    const Subgraph B = induced(g, rest);
    const Configuration fa = part_labels(A.graph, compose(root, A.to_parent), A.from_parent[idx(cut)]);
    const Configuration fb = part_labels(B.graph, compose(root, B.to_parent), B.from_parent[idx(cut)]);
    PartialConfiguration f1(g.size()), f2(g.size());
    place(f1, A.to_parent, fa);
    place(f2, B.to_parent, fb);
    try {
      PartialConfiguration out = join_via_path(g, f1, cut, f2, cut, {});
      note("cut-vertex-join", {}, {cut}, root);
      return checked(g, Configuration(out), "cut-vertex-join");
    } catch (const LemmaError&) {
    }
  }
  return std::nullopt;
}

// --- local rules ------------------------------------------------------------

// C4 v1 v2 v3 v4 with v2, v4 of degree 2: drop v2 and copy f(v4).
std::optional<Configuration> Engine::twin_c4(const Graph& g, const std::vector<Vertex>& root) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto v2 = static_cast<Vertex>(i);
    if (g.degree(v2) != 2) continue;
    const Vertex v1 = g.neighbors(v2)[0];
    const Vertex v3 = g.neighbors(v2)[1];
    if (g.degree(v1) < 3 || g.degree(v3) < 3) continue;
    for (Vertex v4 : g.neighbors(v1)) {
      if (v4 == v2 || g.degree(v4) != 2 || !g.has_edge(v4, v3)) continue;
      const Subgraph r = remove_vertices(g, std::vector<Vertex>{v2});
      if (has_exceptional_component(r.graph)) continue;
      const auto fr = sparse(r.graph, compose(root, r.to_parent));
      if (!fr) continue;
      PartialConfiguration f(g.size());
      place(f, r.to_parent, *fr);
      f.assign(v2, f.at(v4));
      note("twin-c4", {v2}, {v4}, root);
      return checked(g, Configuration(f), "twin-c4");
    }
  }
  return std::nullopt;
}

// Maximal runs of degree-2 vertices between two big vertices.
struct Run {
  Vertex x, y;
  std::vector<Vertex> interior;
};

std::vector<Run> degree2_runs(const Graph& g) {
  std::vector<Run> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto x = static_cast<Vertex>(i);
    if (g.degree(x) < 3) continue;
    for (Vertex n : g.neighbors(x)) {
      if (g.degree(n) != 2) continue;
      Run r{x, -1, {}};
      Vertex prev = x;
      Vertex cur = n;
      while (g.degree(cur) == 2 && r.interior.size() <= g.size()) {
        r.interior.push_back(cur);
        const auto nb = g.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      r.y = cur;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::optional<Configuration> Engine::long_path(const Graph& g, const std::vector<Vertex>& root) {
  const auto runs = degree2_runs(g);
  for (const Run& r : runs) {
    if (r.interior.size() < 4) continue;
    const Contraction c =
        contract_degree2_path(g, {r.x, r.interior[0], r.interior[1], r.interior[2], r.interior[3]});
    if (has_exceptional_component(c.reduced)) continue;
    const auto fr = sparse(c.reduced, compose(root, c.to_original));
    if (!fr) continue;
    trace_.push_back(c.record());
    for (auto& v : trace_.back().removed) v = root[idx(v)];
    for (auto& v : trace_.back().anchors) v = root[idx(v)];
    return checked(g, c.lift(*fr), "contract-path");
  }
  for (const Run& r : runs) {
    if (r.interior.size() != 3 || r.x == r.y) continue;
    const Subgraph h = remove_vertices(g, r.interior);
    if (!is_connected(h.graph) || min_degree(h.graph) < 2 || has_exceptional_component(h.graph)) continue;
    const auto fr = sparse(h.graph, compose(root, h.to_parent));
    if (!fr) continue;
    PartialConfiguration f(g.size());
    place(f, h.to_parent, *fr);
    extend_attached_path(g, f, r.interior, r.x, r.y);
    note("attached-path", r.interior, {r.x, r.y}, root);
    return checked(g, Configuration(f), "attached-path");
  }
  return std::nullopt;
}

std::optional<StarSpec> star_at(const Graph& g, Vertex w) {
  StarSpec s;
  s.center = w;
  for (Vertex n : g.neighbors(w)) {
    if (g.degree(n) != 2) return std::nullopt;
    const Vertex m = g.neighbors(n)[0] == w ? g.neighbors(n)[1] : g.neighbors(n)[0];
    if (m == w) return std::nullopt;
    if (g.degree(m) >= 3) {
      s.x.push_back(n);
      s.u.push_back(m);
      continue;
    }
    const Vertex p = g.neighbors(m)[0] == n ? g.neighbors(m)[1] : g.neighbors(m)[0];
    if (p == w || g.degree(p) < 3) return std::nullopt;
    s.y.push_back(n);
    s.z.push_back(m);
    s.v.push_back(p);
  }
  return s;
}

std::optional<Configuration> Engine::star(const Graph& g, const std::vector<Vertex>& root) {
  std::vector<std::pair<std::size_t, Vertex>> order;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.degree(static_cast<Vertex>(i)) >= 3) order.emplace_back(g.degree(static_cast<Vertex>(i)), static_cast<Vertex>(i));
  }
  std::sort(order.begin(), order.end());
  for (const auto& [deg, w] : order) {
    const auto s = star_at(g, w);
    if (!s || !star_shape_admissible(s->alpha(), s->beta())) continue;
    std::vector<Vertex> drop{w};
    drop.insert(drop.end(), s->x.begin(), s->x.end());
    drop.insert(drop.end(), s->y.begin(), s->y.end());
    drop.insert(drop.end(), s->z.begin(), s->z.end());
    const Subgraph r = remove_vertices(g, drop);
    if (r.graph.empty() || min_degree(r.graph) < 2 || has_exceptional_component(r.graph)) continue;
    PartialConfiguration f(g.size());
    bool ok = true;
    for (const auto& comp : components(r.graph)) {
      const Subgraph part = induced(r.graph, comp);
      const auto fp = sparse(part.graph, compose(compose(root, r.to_parent), part.to_parent));
      if (!fp) {
        ok = false;
        break;
      }
      place(f, compose(r.to_parent, part.to_parent), *fp);
    }
    if (!ok) continue;
    try {
      extend_star(g, f, *s);
    } catch (const LemmaError&) {
      continue;
    }
    std::vector<Vertex> anchors = s->u;
    anchors.insert(anchors.end(), s->v.begin(), s->v.end());
    note("star", drop, anchors, root);
    return checked(g, Configuration(f), "star");
  }
  return std::nullopt;
}

// Two big vertices joined by two paths with two interior vertices each.
std::optional<Configuration> Engine::diagonal_c6(const Graph& g, const std::vector<Vertex>& root) {
  std::map<std::pair<Vertex, Vertex>, std::vector<Run>> by_ends;
  for (Run& r : degree2_runs(g)) {
    if (r.interior.size() != 2 || r.x >= r.y) continue;
    by_ends[{r.x, r.y}].push_back(std::move(r));
  }
  for (const auto& [ends, runs] : by_ends) {
    if (runs.size() < 2) continue;
    const Run& keep = runs[0];
    const Run& drop = runs[1];
    const Subgraph r = remove_vertices(g, drop.interior);
    if (has_exceptional_component(r.graph) || !is_connected(r.graph)) continue;
    const auto fr = sparse(r.graph, compose(root, r.to_parent));
    if (!fr) continue;
    PartialConfiguration f(g.size());
    place(f, r.to_parent, *fr);
    f.assign(drop.interior[0], f.at(keep.interior[0]));
    f.assign(drop.interior[1], f.at(keep.interior[1]));
    note("diagonal-c6", drop.interior, keep.interior, root);
    return checked(g, Configuration(f), "diagonal-c6");
  }
  return std::nullopt;
}

// --- base construction ------------------------------------------------------

// Proper coloring of hp with colors 1..4, following the walk order of each H
// component; backtracking if the pattern fails.
std::vector<int> color_hprime(const Graph& h, const Graph& hp, const std::vector<Vertex>& big) {
  std::vector<int> color(h.size(), 0);
  std::vector<char> seen(h.size(), 0);
  auto proper = [&] {
    for (const Edge& e : hp.edges()) {
      if (color[idx(e.u)] == color[idx(e.v)]) return false;
    }
    return true;
  };
  for (Vertex s : big) {
    if (seen[idx(s)]) continue;
    // Collect the component and pick a walk start: an end of a path, or s.
    std::vector<Vertex> comp{s};
    seen[idx(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : h.neighbors(comp[i])) {
        if (!seen[idx(w)]) {
          seen[idx(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    Vertex start = *std::min_element(comp.begin(), comp.end());
    bool is_cycle = true;
    for (Vertex v : comp) {
      if (h.degree(v) <= 1) {
        is_cycle = false;
        start = std::min(start, v);
      }
    }
    if (!is_cycle) {
      start = -1;
      for (Vertex v : comp) {
        if (h.degree(v) <= 1 && (start < 0 || v < start)) start = v;
      }
    }
    std::vector<Vertex> walk{start};
    std::vector<char> on(h.size(), 0);
    on[idx(start)] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (Vertex w : h.neighbors(walk.back())) {
        if (!on[idx(w)]) {
          on[idx(w)] = 1;
          walk.push_back(w);
          grew = true;
          break;
        }
      }
    }
    const std::size_t m = walk.size();
    std::vector<int> pattern(m);
    if (!is_cycle || m < 3) {
      for (std::size_t i = 0; i < m; ++i) pattern[i] = static_cast<int>(i % 3) + 1;
    } else if (m == 5) {
      pattern = {1, 2, 1, 3, 4};
    } else if (m == 4) {
      pattern = {1, 2, 3, 4};
    } else {
      const std::size_t fours = m % 3;  // blocks of 1234, the rest 123
      std::size_t pos = 0;
      for (std::size_t b = 0; pos < m; ++b) {
        const std::size_t len = b < fours ? 4 : 3;
        for (std::size_t j = 0; j < len; ++j) pattern[pos++] = static_cast<int>(j) + 1;
      }
    }
    for (std::size_t i = 0; i < m; ++i) color[idx(walk[i])] = pattern[i];
  }
  if (proper()) return color;

  // Backtracking fallback.
  std::fill(color.begin(), color.end(), 0);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == big.size()) return true;
    const Vertex v = big[i];
    for (int c = 1; c <= 4; ++c) {
      bool ok = true;
      for (Vertex w : hp.neighbors(v)) ok = ok && color[idx(w)] != c;
      if (!ok) continue;
      color[idx(v)] = c;
      if (go(i + 1)) return true;
    }
    color[idx(v)] = 0;
    return false;
  };
  if (!go(0)) throw SolverGap("auxiliary graph is not 4-colorable");
  return color;
}

// Interior pairs (a, b) of length-3 paths x-a-b-y between big vertices,
// keyed by the ordered pair (x, y) with a adjacent to x.
std::map<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>> length3_paths(const Graph& g) {
  std::map<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>> out;
  for (const Run& r : degree2_runs(g)) {
    if (r.interior.size() != 2 || r.x == r.y) continue;
    out.try_emplace({r.x, r.y}, r.interior[0], r.interior[1]);
  }
  return out;
}

// Fills `fresh` so that it and every assigned neighbor whose neighborhood is
// then fully labeled are satisfied.
bool fill_locally(const Graph& g, PartialConfiguration& f, const std::vector<Vertex>& fresh) {
  std::vector<char> in_fresh(g.size(), 0), in_keep(g.size(), 0);
  std::vector<Vertex> keep = fresh;
  for (Vertex v : fresh) in_fresh[idx(v)] = in_keep[idx(v)] = 1;
  std::vector<Vertex> ring;
  for (Vertex v : fresh) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_keep[idx(w)] && f.is_assigned(w)) {
        in_keep[idx(w)] = 1;
        keep.push_back(w);
        ring.push_back(w);
      }
    }
  }
  const std::size_t ring_end = keep.size();
  for (Vertex v : ring) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_keep[idx(w)] && f.is_assigned(w)) {
        in_keep[idx(w)] = 1;
        keep.push_back(w);
      }
    }
  }
  const Subgraph sub = induced(g, keep);
  AssignmentQuery q;
  q.fixed = PartialConfiguration(keep.size());
  q.exempt.assign(keep.size(), 0);
  for (std::size_t i = fresh.size(); i < keep.size(); ++i) {
    q.fixed.assign(static_cast<Vertex>(i), f.at(keep[i]));
    bool complete = i < ring_end;
    for (Vertex w : g.neighbors(keep[i])) complete = complete && (f.is_assigned(w) || in_fresh[idx(w)]);
    q.exempt[i] = complete ? 0 : 1;
  }
  std::optional<PartialConfiguration> found;
  OracleBudget budget;
  budget.node_limit = 2'000'000;
  search_assignments(sub.graph, q, budget, [&](const PartialConfiguration& sol) {
    found = sol;
    return false;
  });
  if (!found) return false;
  for (std::size_t i = 0; i < fresh.size(); ++i) f.assign(fresh[i], found->at(static_cast<Vertex>(i)));
  return true;
}

std::optional<Configuration> Engine::base(const Graph& g, const std::vector<Vertex>& root) {
  AuxiliaryGraphs aux;
  try {
    aux = build_auxiliary(g);
  } catch (const SolverGap&) {
    return std::nullopt;
  }
  PartialConfiguration f = aux.initial;
  const auto paths = length3_paths(g);
  const Orientation o = orient_min_indegree(aux.L);
  for (const Edge& arc : o.arcs) {
    // The head of each arc gains the interior labels nearest to it.
    const Vertex head = arc.v;
    const Vertex tail = arc.u;
    const auto it = paths.find({head, tail});
    if (it == paths.end()) continue;
    const auto [v1, v2] = it->second;
    if (f.is_assigned(v1) || f.is_assigned(v2)) continue;
    const LabelPair own = f.at(head);
    const LabelSet need = kFull.minus(closed_neighborhood_labels(g, f, head));
    LabelSet ab;
    for (Label l : need.labels()) {
      if (ab.size() < 2) ab.insert(l);
    }
    for (Label l = 1; l <= kLabelCount && ab.size() < 2; ++l) {
      if (!own.set().contains(l)) ab.insert(l);
    }
    extend_path3(g, f, head, v1, v2, tail, LabelPair::from_set(ab));
  }
  // Remaining unlabeled vertices, one connected group at a time.
  std::vector<char> done(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto s = static_cast<Vertex>(i);
    if (f.is_assigned(s) || done[i]) continue;
    std::vector<Vertex> group{s};
    done[i] = 1;
    for (std::size_t k = 0; k < group.size(); ++k) {
      for (Vertex w : g.neighbors(group[k])) {
        if (!f.is_assigned(w) && !done[idx(w)]) {
          done[idx(w)] = 1;
          group.push_back(w);
        }
      }
    }
    if (!fill_locally(g, f, group)) return std::nullopt;
  }
  const Configuration out(f);
  if (!verify(g, out).empty()) return std::nullopt;
  note("base", {}, {}, root);
  return out;
}

// --- general graphs ---------------------------------------------------------

std::optional<Configuration> Engine::opening(const Graph& g, const std::vector<Vertex>& root) {
  // A degree-2 vertex on a C4 whose opposite vertex also has degree 2.
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto v = static_cast<Vertex>(i);
    if (g.degree(v) != 2) continue;
    const Vertex a = g.neighbors(v)[0];
    const Vertex c = g.neighbors(v)[1];
    if (g.degree(a) < 3 || g.degree(c) < 3) continue;
    for (Vertex b : g.neighbors(a)) {
      if (b == v || g.degree(b) != 2 || !g.has_edge(b, c)) continue;
      const Subgraph r = remove_vertices(g, std::vector<Vertex>{v});
      if (detect_exceptional(r.graph)) continue;
      const Configuration fr = general(r.graph, compose(root, r.to_parent));
      PartialConfiguration f(g.size());
      place(f, r.to_parent, fr);
      f.assign(v, f.at(b));
      note("opening-c4", {v}, {b}, root);
      return checked(g, Configuration(f), "opening-c4");
    }
  }
  // A triangle x y z with y and z of degree 2.
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto y = static_cast<Vertex>(i);
    if (g.degree(y) != 2) continue;
    for (Vertex z : g.neighbors(y)) {
      if (z < y || g.degree(z) != 2) continue;
      const Vertex x = g.neighbors(y)[0] == z ? g.neighbors(y)[1] : g.neighbors(y)[0];
      if (!g.has_edge(x, z) || g.degree(x) < 4) continue;
      const Subgraph r = remove_vertices(g, std::vector<Vertex>{y, z});
      if (detect_exceptional(r.graph)) continue;
      const Configuration fr = general(r.graph, compose(root, r.to_parent));
      PartialConfiguration f(g.size());
      place(f, r.to_parent, fr);
      small_extend(g, f, TwoVertex{y, z, x, x});
      note("opening-triangle", {y, z}, {x}, root);
      return checked(g, Configuration(f), "opening-triangle");
    }
  }
  return std::nullopt;
}

Configuration Engine::glue(const Graph& g, const Graph& sparse_g, const std::vector<Vertex>& root) {
  const auto comps = components(sparse_g);
  PartialConfiguration f(g.size());
  std::vector<char> in_h(g.size(), 0);
  struct Pending {
    Subgraph part;
  };
  std::vector<Pending> pending;
  for (const auto& comp : comps) {
    Subgraph part = induced(sparse_g, comp);
    const auto fp = sparse(part.graph, compose(root, part.to_parent));
    if (fp) {
      place(f, part.to_parent, *fp);
      for (Vertex v : part.to_parent) in_h[idx(v)] = 1;
    } else {
      pending.push_back({std::move(part)});
    }
  }
  auto near_on = [&](const Subgraph& part, Vertex end) {
    PartialConfiguration out(g.size());
    place(out, part.to_parent, near_configuration(part.graph, part.from_parent[idx(end)]));
    return out;
  };
  auto member = [&](const Subgraph& part, Vertex v) { return part.from_parent[idx(v)] >= 0; };

  if (std::none_of(in_h.begin(), in_h.end(), [](char c) { return c != 0; }) && !pending.empty()) {
    // Pair the first exceptional component with a neighboring one.
    bool paired = false;
    for (Vertex u : pending[0].part.to_parent) {
      for (Vertex w : g.neighbors(u)) {
        if (member(pending[0].part, w)) continue;
        const auto other = std::find_if(pending.begin() + 1, pending.end(),
                                        [&](const Pending& p) { return member(p.part, w); });
        if (other == pending.end()) continue;
        f = join_via_path(g, near_on(pending[0].part, u), u, near_on(other->part, w), w, {});
        for (Vertex v : pending[0].part.to_parent) in_h[idx(v)] = 1;
        for (Vertex v : other->part.to_parent) in_h[idx(v)] = 1;
        note("pair-exceptional", {}, {u, w}, root);
        pending.erase(other);
        pending.erase(pending.begin());
        paired = true;
        break;
      }
      if (paired) break;
    }
    if (!paired) throw SolverGap("no edge between exceptional components");
  }
  while (!pending.empty()) {
    bool absorbed = false;
    for (auto it = pending.begin(); it != pending.end() && !absorbed; ++it) {
      for (Vertex w : it->part.to_parent) {
        const auto nb = g.neighbors(w);
        const auto u = std::find_if(nb.begin(), nb.end(), [&](Vertex x) { return in_h[idx(x)] != 0; });
        if (u == nb.end()) continue;
        f = join_via_path(g, f, *u, near_on(it->part, w), w, {});
        for (Vertex v : it->part.to_parent) in_h[idx(v)] = 1;
        note("absorb-exceptional", {}, {*u, w}, root);
        pending.erase(it);
        absorbed = true;
        break;
      }
    }
    if (!absorbed) throw SolverGap("exceptional component not adjacent to the configured part");
  }
  return checked(g, Configuration(f), "glue");
}

Configuration Engine::general(const Graph& g, const std::vector<Vertex>& root) {
  if (g.size() <= 7) {
    auto f = detail::exact_configuration(g);
    if (!f) throw SolverGap("small component not configurable but not exceptional");
    note("exact-small", {}, {}, root);
    return *f;
  }
  try {
    if (auto f = opening(g, root)) return *f;
    const Graph sparse_g = minimize_spanning_subgraph(g);
    return glue(g, sparse_g, root);
  } catch (const SolverGap&) {
    if (g.size() > 24) throw;
  }
  if (auto f = exact_or_gap(g, 20'000'000)) {
    note("exact-fallback", {}, {}, root);
    return *f;
  }
  throw SolverGap("no construction found for a component on " + std::to_string(g.size()) + " vertices");
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Configured: return "configured";
    case SolveStatus::Exceptional: return "exceptional";
    case SolveStatus::PreconditionFailed: return "precondition-failed";
  }
  return "?";
}

SparseInstance::SparseInstance(Graph g) : g_(std::move(g)) {
  if (g_.empty() || !is_connected(g_)) throw PreconditionError("sparse instance must be connected and nonempty");
  if (min_degree(g_) < 2) throw PreconditionError("sparse instance has a vertex of degree < 2");
  if (max_degree(g_) > 5) throw PreconditionError("sparse instance has a vertex of degree > 5");
  for (const Edge& e : g_.edges()) {
    if (g_.degree(e.u) >= 3 && g_.degree(e.v) >= 3) {
      throw PreconditionError("sparse instance has adjacent vertices of degree >= 3");
    }
  }
}

SolveResult solve_sparse_special(const SparseInstance& inst) {
  const Graph& g = inst.graph();
  SolveResult out;
  out.labels = PartialConfiguration(g.size());
  ComponentResult comp;
  comp.vertices = identity(g.size());
  Engine engine(out.trace);
  if (auto f = engine.sparse(g, comp.vertices)) {
    if (!verify(g, *f).empty()) throw SolverGap("sparse construction does not verify");
    out.labels = f->partial();
    out.configuration = std::move(f);
  } else {
    comp.status = SolveStatus::Exceptional;
    comp.kind = detect_exceptional(g);
    out.status = SolveStatus::Exceptional;
  }
  out.components.push_back(std::move(comp));
  return out;
}

SolveResult solve(const Graph& g) {
  SolveResult out;
  out.labels = PartialConfiguration(g.size());
  Engine engine(out.trace);
  bool failed = false;
  bool exceptional = false;
  for (const auto& ids : components(g)) {
    ComponentResult comp;
    comp.vertices = ids;
    std::sort(comp.vertices.begin(), comp.vertices.end());
    const Subgraph sub = induced(g, comp.vertices);
    const Graph& h = sub.graph;
    std::optional<Vertex> low;
    for (std::size_t v = 0; v < h.size(); ++v) {
      if (h.degree(static_cast<Vertex>(v)) < 2) {
        low = static_cast<Vertex>(v);
        break;
      }
    }
    if (low) {
      comp.status = SolveStatus::PreconditionFailed;
      comp.reason = "min-degree";
      comp.witness = {sub.to_parent[idx(*low)]};
    } else if (auto star = find_induced_star(h, 6)) {
      comp.status = SolveStatus::PreconditionFailed;
      comp.reason = "induced-k16";
      for (Vertex v : *star) comp.witness.push_back(sub.to_parent[idx(v)]);
    } else if (auto kind = detect_exceptional(h)) {
      comp.status = SolveStatus::Exceptional;
      comp.kind = kind;
    } else {
      const Configuration f = engine.general(h, sub.to_parent);
      if (!verify(h, f).empty()) throw SolverGap("component construction does not verify");
      place(out.labels, sub.to_parent, f);
    }
    failed = failed || comp.status == SolveStatus::PreconditionFailed;
    exceptional = exceptional || comp.status == SolveStatus::Exceptional;
    out.components.push_back(std::move(comp));
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const ComponentResult& a, const ComponentResult& b) { return a.vertices < b.vertices; });
  out.status = failed ? SolveStatus::PreconditionFailed
                      : exceptional ? SolveStatus::Exceptional : SolveStatus::Configured;
  if (out.status == SolveStatus::Configured) {
    Configuration f(out.labels);
    if (!verify(g, f).empty()) throw SolverGap("final configuration does not verify");
    out.configuration = std::move(f);
  }
  return out;
}

// ---------------------------------------------------------------------------

Graph minimize_spanning_subgraph(const Graph& g) {
  if (g.empty() || min_degree(g) < 2) throw PreconditionError("spanning subgraph needs min degree >= 2");
  const std::size_t n = g.size();
  std::vector<std::set<Vertex>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[idx(e.u)].insert(e.v);
    adj[idx(e.v)].insert(e.u);
  }
  auto deg = [&](Vertex v) { return adj[idx(v)].size(); };
  auto drop = [&](Vertex a, Vertex b) {
    adj[idx(a)].erase(b);
    adj[idx(b)].erase(a);
  };
  auto add = [&](Vertex a, Vertex b) {
    adj[idx(a)].insert(b);
    adj[idx(b)].insert(a);
  };
  auto common = [&](Vertex a, Vertex b) {
    std::size_t c = 0;
    for (Vertex w : adj[idx(a)]) c += adj[idx(b)].count(w);
    return c;
  };

  for (bool changed = true; changed;) {
    changed = false;
    // Edges between two vertices of degree >= 3 are redundant.
    for (std::size_t a = 0; a < n; ++a) {
      const auto av = static_cast<Vertex>(a);
      for (Vertex b : std::vector<Vertex>(adj[a].begin(), adj[a].end())) {
        if (b > av && deg(av) >= 3 && deg(b) >= 3) {
          drop(av, b);
          changed = true;
        }
      }
    }
    if (changed) continue;
    for (std::size_t vi = 0; vi < n && !changed; ++vi) {
      const auto v = static_cast<Vertex>(vi);
      if (deg(v) < 4) continue;
      const std::vector<Vertex> nb(adj[vi].begin(), adj[vi].end());
      // Two degree-2 neighbors adjacent in g but not here: reroute through xy.
      for (std::size_t i = 0; i < nb.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < nb.size() && !changed; ++j) {
          const Vertex x = nb[i], y = nb[j];
          if (deg(x) != 2 || deg(y) != 2 || !g.has_edge(x, y) || adj[idx(x)].count(y)) continue;
          drop(x, v);
          drop(y, v);
          add(x, y);
          changed = true;
        }
      }
      if (changed || deg(v) < 6) continue;
      // Triangles v x y at a high-degree vertex: move xv to another g-neighbor.
      for (std::size_t i = 0; i < nb.size() && !changed; ++i) {
        for (std::size_t j = 0; j < nb.size() && !changed; ++j) {
          const Vertex x = nb[i], y = nb[j];
          if (x == y || !adj[idx(x)].count(y)) continue;
          for (Vertex u : g.neighbors(x)) {
            if (u == v || u == y || adj[idx(x)].count(u)) continue;
            const std::size_t lost = common(x, v);
            drop(x, v);
            add(x, u);
            if (common(x, u) < lost) {
              changed = true;
              break;
            }
            drop(x, u);
            add(x, v);
          }
        }
      }
    }
  }

  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (Vertex b : adj[a]) {
      if (static_cast<Vertex>(a) < b) edges.push_back({static_cast<Vertex>(a), b});
    }
  }
  Graph out = Graph::from_edges(n, edges);
  if (min_degree(out) < 2) throw std::logic_error("spanning subgraph lost min degree 2");
  for (const Edge& e : edges) {
    if (out.degree(e.u) >= 3 && out.degree(e.v) >= 3) throw std::logic_error("adjacent big vertices remain");
  }
  if (max_degree(out) > 5 && is_k16_free(g)) throw SolverGap("spanning subgraph keeps a vertex of degree > 5");
  return out;
}

AuxiliaryGraphs build_auxiliary(const Graph& g) {
  const std::size_t n = g.size();
  AuxiliaryGraphs aux;
  std::vector<char> big(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(static_cast<Vertex>(v)) >= 3) {
      big[v] = 1;
      aux.big.push_back(static_cast<Vertex>(v));
    }
  }
  std::set<std::pair<Vertex, Vertex>> h_edges;
  for (std::size_t m = 0; m < n; ++m) {
    const auto nb = g.neighbors(static_cast<Vertex>(m));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (big[idx(nb[i])] && big[idx(nb[j])]) h_edges.insert({std::min(nb[i], nb[j]), std::max(nb[i], nb[j])});
      }
    }
  }
  std::vector<Edge> he;
  for (const auto& [a, b] : h_edges) he.push_back({a, b});
  aux.H = Graph::from_edges(n, he);
  if (max_degree(aux.H) > 2) throw SolverGap("auxiliary graph H has a vertex of degree > 2");

  std::set<std::pair<Vertex, Vertex>> h2 = h_edges;
  for (Vertex m : aux.big) {
    const auto nb = aux.H.neighbors(m);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) h2.insert({std::min(nb[i], nb[j]), std::max(nb[i], nb[j])});
    }
  }
  std::vector<Edge> e2;
  for (const auto& [a, b] : h2) e2.push_back({a, b});
  aux.H2 = Graph::from_edges(n, e2);

  // A five-cycle in H squares to K5; drop the square edge p0 p2 along it.
  std::set<std::pair<Vertex, Vertex>> hp = h2;
  std::vector<char> seen(n, 0);
  for (Vertex s : aux.big) {
    if (seen[idx(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[idx(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : aux.H.neighbors(comp[i])) {
        if (!seen[idx(w)]) {
          seen[idx(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    const bool c5 = comp.size() == 5 &&
                    std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return aux.H.degree(v) == 2; });
    if (!c5) continue;
    const Vertex p0 = *std::min_element(comp.begin(), comp.end());
    const Vertex p1 = aux.H.neighbors(p0)[0];
    const Vertex p2 = aux.H.neighbors(p1)[0] == p0 ? aux.H.neighbors(p1)[1] : aux.H.neighbors(p1)[0];
    hp.erase({std::min(p0, p2), std::max(p0, p2)});
  }
  std::vector<Edge> ep;
  for (const auto& [a, b] : hp) ep.push_back({a, b});
  aux.Hprime = Graph::from_edges(n, ep);

  aux.color = color_hprime(aux.H, aux.Hprime, aux.big);
  aux.initial = PartialConfiguration(n);
  for (Vertex v : aux.big) aux.initial.assign(v, LabelPair(aux.color[idx(v)], 5));
  for (std::size_t v = 0; v < n; ++v) {
    const auto vv = static_cast<Vertex>(v);
    if (g.degree(vv) != 2) continue;
    const Vertex x = g.neighbors(vv)[0];
    const Vertex y = g.neighbors(vv)[1];
    if (!big[idx(x)] || !big[idx(y)]) continue;
    const LabelSet rest = kFull.minus(aux.initial.at(x).set() | aux.initial.at(y).set());
    if (rest.size() != 2) throw SolverGap("neighbors of a connector share a color");
    aux.U.push_back(vv);
    aux.initial.assign(vv, LabelPair::from_set(rest));
  }
  for (Vertex v : aux.big) {
    if (closed_neighborhood_labels(g, aux.initial, v) == kFull) continue;
    aux.W.push_back(v);
    (aux.H.degree(v) == 0 ? aux.X : aux.Y).push_back(v);
  }
  std::set<std::pair<Vertex, Vertex>> l_edges;
  for (const auto& [ends, inner] : length3_paths(g)) {
    l_edges.insert({std::min(ends.first, ends.second), std::max(ends.first, ends.second)});
  }
  std::vector<Edge> el;
  for (const auto& [a, b] : l_edges) el.push_back({a, b});
  aux.L = Graph::from_edges(n, el);
  return aux;
}

RConfiguration make_r_configuration(const Graph& g, const Configuration& f, int r) {
  if (r < 1) throw PreconditionError("r must be positive");
  if (g.empty() || min_degree(g) < 1) throw PreconditionError("graph has an isolated vertex");
  if (f.size() != g.size() || !verify(g, f).empty()) throw LabelError("input is not a configuration of the graph");
  const std::size_t n = g.size();
  RConfiguration out;
  out.r = r;
  out.universe = 5 * r / 2;
  out.sets.assign(n, {});
  const int half = r / 2;
  for (std::size_t v = 0; v < n; ++v) {
    for (Label i : f[static_cast<Vertex>(v)].set().labels()) {
      for (int j = 1; j <= half; ++j) out.sets[v].push_back((i - 1) * half + j);
    }
  }
  if (r % 2 == 1) {
    // Two disjoint dominating sets: a maximal independent set and the rest.
    std::vector<char> in_set(n, 0), blocked(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (blocked[v]) continue;
      in_set[v] = 1;
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) blocked[idx(w)] = 1;
    }
    const int offset = 5 * (r - 1) / 2;
    for (std::size_t v = 0; v < n; ++v) out.sets[v].push_back(offset + (in_set[v] ? 1 : 2));
  }
  for (auto& s : out.sets) std::sort(s.begin(), s.end());
  return out;
}

}  // namespace sensorcfg
