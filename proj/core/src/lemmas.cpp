#include "sensorcfg/lemmas.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "detail.hpp"
#include "sensorcfg/oracle.hpp"

namespace sensorcfg {

namespace {

using detail::idx;

constexpr LabelSet kFull = LabelSet::full();

LabelPair P(int code) { return LabelPair(code / 10, code % 10); }

void require(bool cond, const std::string& what) {
  if (!cond) throw LemmaError(what);
}

void require_vertex(const Graph& g, Vertex v) {
  require(v >= 0 && idx(v) < g.size(), "vertex " + std::to_string(v) + " out of range");
}

void require_edge(const Graph& g, Vertex a, Vertex b) {
  require_vertex(g, a);
  require_vertex(g, b);
  require(g.has_edge(a, b), "missing edge " + std::to_string(a) + "-" + std::to_string(b));
}

void require_assigned(const PartialConfiguration& f, Vertex v) {
  require(idx(v) < f.size() && f.is_assigned(v), "vertex " + std::to_string(v) + " must be labeled");
}

void require_unassigned(const PartialConfiguration& f, Vertex v) {
  require(idx(v) < f.size() && !f.is_assigned(v), "vertex " + std::to_string(v) + " must be unlabeled");
}

void require_distinct(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  require(std::adjacent_find(vs.begin(), vs.end()) == vs.end(), "vertices must be distinct");
}

void ensure_covered(const Graph& g, const PartialConfiguration& f, std::span<const Vertex> vs, const char* op) {
  if (!detail::all_covered(g, f, vs)) throw std::logic_error(std::string(op) + ": construction left a vertex unsatisfied");
}

LabelPermutation must(std::optional<LabelPermutation> p, const char* what) {
  if (!p) throw std::logic_error(std::string("no normalizing permutation: ") + what);
  return *p;
}

// Row blocks for paths hanging off x and y, indexed by [k mod 3][shape] where
// shape 0: f(x) = f(y) = {1,2}; 1: {1,2},{1,3}; 2: {1,2},{3,4}.
struct PathRow {
  std::array<int, 3> block;
  std::vector<int> tail;
};

const PathRow kPathRows[3][3] = {
    {{{13, 45, 23}, {}}, {{34, 15, 24}, {}}, {{34, 15, 12}, {}}},
    {{{34, 15, 25}, {34}}, {{34, 15, 25}, {34}}, {{35, 14, 12}, {35}}},
    {{{34, 15, 12}, {34, 15}}, {{34, 25, 12}, {34, 25}}, {{34, 15, 24}, {13, 25}}},
};

// Cycle w1..wm with f(w1) = w, every other vertex satisfied and w1 missing
// only labels from `allowed`.
std::vector<LabelPair> cycle_with_fixed_start(std::size_t m, LabelPair w, LabelSet allowed) {
  if (m >= 9) {
    // Contract w2 w3 w4 and lift: w1 keeps seeing the same labels.
    auto shorter = cycle_with_fixed_start(m - 3, w, allowed);
    auto three = contraction_lift(shorter[0], shorter[1]);
    std::vector<LabelPair> out{shorter[0], three[0], three[1], three[2]};
    out.insert(out.end(), shorter.begin() + 1, shorter.end());
    return out;
  }
  const auto& pairs = LabelPair::all();
  if (m == 3) {
    for (LabelPair a : pairs) {
      for (LabelPair b : pairs) {
        if ((w.set() | a.set() | b.set()) == kFull) return {w, a, b};
      }
    }
    throw std::logic_error("no triangle completion");
  }
  const Graph c = cycle_graph(m);
  for (LabelPair a : pairs) {
    for (LabelPair b : pairs) {
      if (!kFull.minus(w.set() | a.set() | b.set()).is_subset_of(allowed)) continue;
      AssignmentQuery q;
      q.exempt.assign(m, 0);
      q.exempt[0] = 1;
      q.fixed = PartialConfiguration(m);
      q.fixed.assign(0, w);
      q.fixed.assign(1, a);
      q.fixed.assign(static_cast<Vertex>(m - 1), b);
      std::optional<PartialConfiguration> sol;
      search_assignments(c, q, {}, [&](const PartialConfiguration& s) {
        sol = s;
        return false;
      });
      if (sol) {
        std::vector<LabelPair> out;
        for (std::size_t i = 0; i < m; ++i) out.push_back(sol->at(static_cast<Vertex>(i)));
        return out;
      }
    }
  }
  throw std::logic_error("no cycle completion for tailed cycle");
}

}  // namespace

// ---------------------------------------------------------------------------

LabelPair path3_completion(LabelPair f1, LabelPair f4, LabelPair ab) {
  const LabelSet common = f1.set() & f4.set();
  require(!common.empty(), "path3_completion: end labels must intersect");
  require((ab.set() & f1.set()).empty(), "path3_completion: {a,b} must avoid f(v1)");
  const Label c = common.min();
  const Label d = f1.set().minus(LabelSet{c}).min();
  const Label e = kFull.minus(f1.set() | ab.set()).min();
  return {d, e};
}

void extend_path3(const Graph& g, PartialConfiguration& f, Vertex v1, Vertex v2, Vertex v3, Vertex v4,
                  LabelPair ab) {
  require_edge(g, v1, v2);
  require_edge(g, v2, v3);
  require_edge(g, v3, v4);
  require_distinct({v1, v2, v3, v4});
  require_assigned(f, v1);
  require_assigned(f, v4);
  require_unassigned(f, v2);
  require_unassigned(f, v3);
  const LabelPair third = path3_completion(f.at(v1), f.at(v4), ab);
  f.assign(v2, ab);
  f.assign(v3, third);
  const std::array<Vertex, 2> fresh{v2, v3};
  ensure_covered(g, f, fresh, "extend_path3");
}

std::vector<LabelPair> attached_path_labels(LabelPair fx, LabelPair fy, std::size_t k) {
  require(k >= 3, "attached path needs at least three vertices");
  const LabelSet common = fx.set() & fy.set();
  int shape = 0;
  LabelPermutation sigma;
  if (fx == fy) {
    sigma = must(detail::first_permutation([&](const LabelPermutation& s) { return s(fx) == P(12); }), "equal");
  } else if (common.size() == 1) {
    const Label c = common.min();
    const Label a = fx.set().minus(common).min();
    const Label b = fy.set().minus(common).min();
    shape = 1;
    sigma = must(detail::first_permutation([&](const LabelPermutation& s) { return s(c) == 1 && s(a) == 2 && s(b) == 3; }),
                 "one common");
  } else {
    shape = 2;
    sigma = must(detail::first_permutation([&](const LabelPermutation& s) { return s(fx) == P(12) && s(fy) == P(34); }),
                 "disjoint");
  }
  const PathRow& row = kPathRows[k % 3][shape];
  const LabelPermutation inv = sigma.inverse();
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < (k - row.tail.size()) / 3; ++i) {
    for (int code : row.block) out.push_back(inv(P(code)));
  }
  for (int code : row.tail) out.push_back(inv(P(code)));
  if (out.size() != k) throw std::logic_error("attached path table size mismatch");
  return out;
}

void extend_attached_path(const Graph& g, PartialConfiguration& f, std::span<const Vertex> path, Vertex x, Vertex y) {
  require(path.size() >= 3, "attached path needs at least three vertices");
  require_assigned(f, x);
  require_assigned(f, y);
  require_edge(g, x, path.front());
  require_edge(g, path.back(), y);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) require_edge(g, path[i], path[i + 1]);
  std::vector<Vertex> all(path.begin(), path.end());
  require_distinct(all);
  for (Vertex v : path) {
    require(v != x && v != y, "anchors cannot lie on the path");
    require_unassigned(f, v);
  }
  const auto labels = attached_path_labels(f.at(x), f.at(y), path.size());
  for (std::size_t i = 0; i < path.size(); ++i) f.assign(path[i], labels[i]);
  ensure_covered(g, f, path, "extend_attached_path");
}

// ---------------------------------------------------------------------------

bool star_shape_admissible(std::size_t alpha, std::size_t beta) {
  if (alpha + beta < 2) return false;  // the center could see at most four labels
  return alpha + 3 * beta <= 9 || (alpha == 1 && beta == 3);
}

void extend_star(const Graph& g, PartialConfiguration& f, const StarSpec& s) {
  const std::size_t alpha = s.alpha();
  const std::size_t beta = s.beta();
  require(s.u.size() == alpha, "star: one anchor per length-1 ray");
  require(s.z.size() == beta && s.v.size() == beta, "star: one z and one anchor per length-2 ray");
  require(star_shape_admissible(alpha, beta), "star shape not admissible");
  require(alpha + beta >= 1, "star needs at least one ray");
  const Vertex w = s.center;
  require_vertex(g, w);
  require_unassigned(f, w);
  std::vector<Vertex> fresh{w};
  for (std::size_t i = 0; i < alpha; ++i) {
    require_edge(g, w, s.x[i]);
    require_edge(g, s.x[i], s.u[i]);
    require_unassigned(f, s.x[i]);
    require_assigned(f, s.u[i]);
    fresh.push_back(s.x[i]);
  }
  for (std::size_t j = 0; j < beta; ++j) {
    require_edge(g, w, s.y[j]);
    require_edge(g, s.y[j], s.z[j]);
    require_edge(g, s.z[j], s.v[j]);
    require_unassigned(f, s.y[j]);
    require_unassigned(f, s.z[j]);
    require_assigned(f, s.v[j]);
    fresh.push_back(s.y[j]);
    fresh.push_back(s.z[j]);
  }
  require_distinct(fresh);

  if (alpha + beta < 3) {
    require(detail::complete_by_search(g, f, fresh), "star has no extension");
    return;
  }

  std::set<LabelPair> forbidden;
  LabelSet u_union;
  for (Vertex u : s.u) {
    forbidden.insert(f.at(u));
    u_union = u_union | f.at(u).set();
  }
  for (Vertex v : s.v) {
    const auto rest = kFull.minus(f.at(v).set()).labels();
    for (std::size_t a = 0; a < rest.size(); ++a) {
      for (std::size_t b = a + 1; b < rest.size(); ++b) forbidden.insert(LabelPair(rest[a], rest[b]));
    }
  }
  std::optional<LabelPair> fw;
  for (LabelPair p : LabelPair::all()) {
    const bool ok = (beta == 0 && u_union.size() <= 3) ? (p.set() & u_union).empty() : !forbidden.contains(p);
    if (ok) {
      fw = p;
      break;
    }
  }
  require(fw.has_value(), "every pair is forbidden for the star center");
  f.assign(w, *fw);
  const LabelSet own = fw->set();

  if (beta == 0) {
    std::vector<std::vector<LabelPair>> options(alpha);
    for (std::size_t i = 0; i < alpha; ++i) {
      const LabelSet need = kFull.minus(f.at(s.u[i]).set() | own);
      for (LabelPair p : LabelPair::all()) {
        if ((p.set() & own).empty() && need.is_subset_of(p.set())) options[i].push_back(p);
      }
    }
    std::vector<LabelPair> pick(alpha, P(12));
    std::function<bool(std::size_t, LabelSet)> go = [&](std::size_t i, LabelSet seen) {
      if (i == alpha) return seen == kFull;
      for (LabelPair p : options[i]) {
        pick[i] = p;
        if (go(i + 1, seen | p.set())) return true;
      }
      return false;
    };
    if (!go(0, own)) {
      f.unassign(w);
      throw LemmaError("star: length-1 rays cannot cover the center");
    }
    for (std::size_t i = 0; i < alpha; ++i) f.assign(s.x[i], pick[i]);
  } else {
    LabelSet seen = own;
    for (std::size_t i = 0; i < alpha; ++i) {
      const LabelSet need = kFull.minus(f.at(s.u[i]).set() | own);
      const LabelPair p = detail::pad_to_pair(need, seen | own);
      f.assign(s.x[i], p);
      seen = seen | p.set();
    }
    const LabelSet outside = kFull.minus(own);
    for (std::size_t j = 0; j < beta; ++j) {
      LabelPair ab = P(12);
      if (j + 1 < beta) {
        // Two labels outside f(w), preferring ones the center has not seen.
        LabelSet pick;
        for (Label l : outside.labels()) {
          if (!seen.contains(l) && pick.size() < 2) pick.insert(l);
        }
        for (Label l : outside.labels()) {
          if (pick.size() < 2) pick.insert(l);
        }
        ab = LabelPair::from_set(pick);
      } else {
        const LabelSet missing = kFull.minus(seen);
        require(missing.size() <= 2, "star: center misses too many labels before the last ray");
        ab = detail::pad_to_pair(missing, own);
      }
      extend_path3(g, f, w, s.y[j], s.z[j], s.v[j], ab);
      seen = seen | ab.set();
    }
  }
  ensure_covered(g, f, fresh, "extend_star");
}

// ---------------------------------------------------------------------------

std::array<LabelPair, 3> contraction_lift(LabelPair fx, LabelPair fy) {
  if (fx == fy) {
    const auto v = attached_path_labels(fx, fy, 3);
    return {v[0], v[1], v[2]};
  }
  return {fy, detail::pad_to_pair(kFull.minus(fx.set() | fy.set())), fx};
}

std::string to_string(const ReductionStep& step) {
  std::ostringstream os;
  auto list = [&](const std::vector<Vertex>& vs) {
    os << '[';
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << ']';
  };
  os << step.rule << " removed=";
  list(step.removed);
  os << " anchors=";
  list(step.anchors);
  return os.str();
}

Configuration Contraction::lift(const Configuration& reduced_f) const {
  if (reduced_f.size() != reduced.size()) throw LemmaError("lift: configuration size mismatch");
  PartialConfiguration out(from_original.size());
  for (std::size_t r = 0; r < to_original.size(); ++r) out.assign(to_original[r], reduced_f[static_cast<Vertex>(r)]);
  const auto three = contraction_lift(reduced_f[from_original[idx(path[0])]], reduced_f[from_original[idx(path[4])]]);
  for (std::size_t i = 0; i < 3; ++i) out.assign(path[i + 1], three[i]);
  return Configuration(out);
}

ReductionStep Contraction::record() const {
  return {"contract-path", {path[1], path[2], path[3]}, {path[0], path[4]}};
}

Contraction contract_degree2_path(const Graph& g, const std::array<Vertex, 5>& path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) require_edge(g, path[i], path[i + 1]);
  require_distinct({path.begin(), path.end()});
  for (std::size_t i = 1; i <= 3; ++i) require(g.degree(path[i]) == 2, "contracted vertices must have degree 2");
  Contraction c;
  c.path = path;
  const std::array<Vertex, 3> drop{path[1], path[2], path[3]};
  Subgraph sub = remove_vertices(g, drop);
  const Vertex rx = sub.from_parent[idx(path[0])];
  const Vertex ry = sub.from_parent[idx(path[4])];
  c.edge_added = !sub.graph.has_edge(rx, ry);
  c.reduced = c.edge_added ? sub.graph.with_edge(rx, ry) : sub.graph;
  c.to_original = std::move(sub.to_parent);
  c.from_original = std::move(sub.from_parent);
  return c;
}

// ---------------------------------------------------------------------------

TailedCycleLabels tailed_cycle_labels(LabelPair f_u0, LabelSet missing_u0, std::size_t k, std::size_t m) {
  require(m >= 3, "tailed cycle needs a cycle of length at least 3");
  require(missing_u0.size() <= 2, "u0 may miss at most two labels");
  require((missing_u0 & f_u0.set()).empty(), "u0 cannot miss its own labels");
  if (k >= 3) {
    TailedCycleLabels shorter = tailed_cycle_labels(f_u0, missing_u0, k - 3, m);
    const LabelPair next = shorter.tail.empty() ? shorter.cycle.front() : shorter.tail.front();
    const auto three = contraction_lift(f_u0, next);
    shorter.tail.insert(shorter.tail.begin(), three.begin(), three.end());
    return shorter;
  }
  const LabelPermutation sigma = must(detail::first_permutation([&](const LabelPermutation& s) {
                                        return s(f_u0) == P(12) && s(missing_u0).is_subset_of(LabelSet{3, 4});
                                      }),
                                      "tailed cycle");
  // Normal-frame hand-offs: tail labels, f(w1), labels w1 may miss.
  struct Handoff {
    std::vector<int> tail;
    int w1;
    LabelSet allowed;
  };
  static const Handoff kHandoffs[3] = {
      {{}, 34, LabelSet{1, 2}},
      {{34}, 25, LabelSet{3, 4}},
      {{34, 15}, 23, LabelSet{1, 5}},
  };
  const Handoff& h = kHandoffs[k];
  const LabelPermutation inv = sigma.inverse();
  TailedCycleLabels out;
  for (int code : h.tail) out.tail.push_back(inv(P(code)));
  for (LabelPair p : cycle_with_fixed_start(m, P(h.w1), h.allowed)) out.cycle.push_back(inv(p));
  return out;
}

void extend_tailed_cycle(const Graph& g, PartialConfiguration& f, Vertex u0, std::span<const Vertex> tail,
                         std::span<const Vertex> cycle) {
  require(cycle.size() >= 3, "tailed cycle needs a cycle of length at least 3");
  require_assigned(f, u0);
  std::vector<Vertex> chain{u0};
  chain.insert(chain.end(), tail.begin(), tail.end());
  chain.push_back(cycle.front());
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) require_edge(g, chain[i], chain[i + 1]);
  for (std::size_t i = 0; i < cycle.size(); ++i) require_edge(g, cycle[i], cycle[(i + 1) % cycle.size()]);
  std::vector<Vertex> fresh(tail.begin(), tail.end());
  fresh.insert(fresh.end(), cycle.begin(), cycle.end());
  for (Vertex v : fresh) require_unassigned(f, v);
  std::vector<Vertex> all = fresh;
  all.push_back(u0);
  require_distinct(all);

  const LabelSet missing = kFull.minus(closed_neighborhood_labels(g, f, u0));
  const auto labels = tailed_cycle_labels(f.at(u0), missing, tail.size(), cycle.size());
  for (std::size_t i = 0; i < tail.size(); ++i) f.assign(tail[i], labels.tail[i]);
  for (std::size_t i = 0; i < cycle.size(); ++i) f.assign(cycle[i], labels.cycle[i]);
  ensure_covered(g, f, all, "extend_tailed_cycle");
}

// ---------------------------------------------------------------------------

LabelPair one_vertex_label(LabelPair fx, LabelPair fy) {
  require(fx != fy, "one new vertex needs differently labeled neighbors");
  return detail::pad_to_pair(kFull.minus(fx.set() | fy.set()));
}

std::pair<LabelPair, LabelPair> two_vertex_labels(LabelPair fx, LabelPair fy) {
  require(!(fx.set() & fy.set()).empty(), "two new vertices need intersecting end labels");
  for (LabelPair a : LabelPair::all()) {
    for (LabelPair b : LabelPair::all()) {
      if ((fx.set() | a.set() | b.set()) == kFull && (a.set() | b.set() | fy.set()) == kFull) return {a, b};
    }
  }
  throw std::logic_error("two_vertex_labels: no completion");
}

void small_extend(const Graph& g, PartialConfiguration& f, const OneVertex& m) {
  require_edge(g, m.v, m.x);
  require_edge(g, m.v, m.y);
  require_assigned(f, m.x);
  require_assigned(f, m.y);
  require_unassigned(f, m.v);
  f.assign(m.v, one_vertex_label(f.at(m.x), f.at(m.y)));
  const std::array<Vertex, 1> fresh{m.v};
  ensure_covered(g, f, fresh, "small_extend");
}

void small_extend(const Graph& g, PartialConfiguration& f, const TwoVertex& m) {
  require_edge(g, m.x, m.u);
  require_edge(g, m.u, m.v);
  require_edge(g, m.v, m.y);
  require_assigned(f, m.x);
  require_assigned(f, m.y);
  require_unassigned(f, m.u);
  require_unassigned(f, m.v);
  const auto [a, b] = two_vertex_labels(f.at(m.x), f.at(m.y));
  f.assign(m.u, a);
  f.assign(m.v, b);
  const std::array<Vertex, 2> fresh{m.u, m.v};
  ensure_covered(g, f, fresh, "small_extend");
}

// ---------------------------------------------------------------------------

namespace {

const std::array<int, 5> kC5Pattern{14, 25, 13, 24, 35};
const std::array<int, 6> kC6Pattern{13, 24, 15, 23, 14, 25};

}  // namespace

std::optional<Configuration> cycle_configuration(std::size_t m) {
  require(m >= 3, "cycles have at least three vertices");
  if (m == 4 || m == 7) return std::nullopt;
  std::vector<LabelPair> labels;
  switch (m % 3) {
    case 0:
      labels = {P(12), P(34), P(15)};
      break;
    case 2:
      for (int c : kC5Pattern) labels.push_back(P(c));
      break;
    default:
      for (int rep = 0; rep < 2; ++rep) {
        for (int c : kC5Pattern) labels.push_back(P(c));
      }
      break;
  }
  while (labels.size() < m) {
    const auto three = contraction_lift(labels.back(), labels.front());
    labels.insert(labels.end(), three.begin(), three.end());
  }
  return Configuration(std::move(labels));
}

Graph cycle_with_added_path_graph(std::size_t c, std::size_t path_vertices, Vertex a, Vertex b) {
  require(c == 5 || c == 6, "base cycle must be C5 or C6");
  require(path_vertices == 1 || path_vertices == 2, "added path has one or two new vertices");
  const Graph cyc = cycle_graph(c);
  require_vertex(cyc, a);
  require_vertex(cyc, b);
  require(a != b && !cyc.has_edge(a, b), "attachment vertices must be distinct and nonadjacent");
  std::vector<Edge> edges = cyc.edges();
  const auto n = static_cast<Vertex>(c);
  if (path_vertices == 1) {
    edges.push_back({a, n});
    edges.push_back({n, b});
  } else {
    edges.push_back({a, n});
    edges.push_back({n, n + 1});
    edges.push_back({n + 1, b});
  }
  return Graph::from_edges(c + path_vertices, edges);
}

Configuration cycle_with_added_path(std::size_t c, std::size_t path_vertices, Vertex a, Vertex b) {
  const Graph g = cycle_with_added_path_graph(c, path_vertices, a, b);
  PartialConfiguration f(g.size());
  for (std::size_t i = 0; i < c; ++i) f.assign(static_cast<Vertex>(i), P(c == 5 ? kC5Pattern[i] : kC6Pattern[i]));
  const auto n = static_cast<Vertex>(c);
  if (path_vertices == 1) {
    small_extend(g, f, OneVertex{n, a, b});
  } else {
    small_extend(g, f, TwoVertex{n, n + 1, a, b});
  }
  return Configuration(f);
}

void add_c5_two_tails(const Graph& g, PartialConfiguration& f, const TwoTailedC5& s) {
  require(s.p.size() == 1 || s.p.size() == 2, "tail p has one or two vertices");
  require(s.q.size() == 1 || s.q.size() == 2, "tail q has one or two vertices");
  require_assigned(f, s.x);
  require_assigned(f, s.y);
  for (std::size_t i = 0; i < 5; ++i) require_edge(g, s.cycle[i], s.cycle[(i + 1) % 5]);
  require_edge(g, s.x, s.p.front());
  require_edge(g, s.p.back(), s.cycle[0]);
  require_edge(g, s.y, s.q.front());
  require_edge(g, s.q.back(), s.cycle[2]);
  if (s.p.size() == 2) require_edge(g, s.p[0], s.p[1]);
  if (s.q.size() == 2) require_edge(g, s.q[0], s.q[1]);
  std::vector<Vertex> fresh(s.cycle.begin(), s.cycle.end());
  fresh.insert(fresh.end(), s.p.begin(), s.p.end());
  fresh.insert(fresh.end(), s.q.begin(), s.q.end());
  require_distinct(fresh);
  for (Vertex v : fresh) require_unassigned(f, v);

  const LabelPair fx = f.at(s.x);
  const LabelPair fy = f.at(s.y);
  const LabelSet common = fx.set() & fy.set();
  std::array<Label, 5> image{};  // image[l-1] = normal-frame label of l
  if (!common.empty()) {
    const Label c = common.min();
    const auto rest = kFull.minus(fx.set() | fy.set()).labels();
    image[static_cast<std::size_t>(c - 1)] = 1;
    image[static_cast<std::size_t>(rest[0] - 1)] = 3;
    image[static_cast<std::size_t>(rest[1] - 1)] = 4;
    const auto others = kFull.minus(LabelSet{c, rest[0], rest[1]}).labels();
    image[static_cast<std::size_t>(others[0] - 1)] = 2;
    image[static_cast<std::size_t>(others[1] - 1)] = 5;
  } else {
    image[static_cast<std::size_t>(fx.first() - 1)] = 1;
    image[static_cast<std::size_t>(fx.second() - 1)] = 2;
    image[static_cast<std::size_t>(fy.first() - 1)] = 3;
    image[static_cast<std::size_t>(fy.second() - 1)] = 4;
    image[static_cast<std::size_t>(kFull.minus(fx.set() | fy.set()).min() - 1)] = 5;
  }
  const LabelPermutation inv = LabelPermutation(image).inverse();
  const std::array<int, 5> normal{13, 25, 14, 35, 24};
  for (std::size_t i = 0; i < 5; ++i) f.assign(s.cycle[i], inv(P(normal[i])));
  if (s.p.size() == 1) {
    small_extend(g, f, OneVertex{s.p[0], s.x, s.cycle[0]});
  } else {
    small_extend(g, f, TwoVertex{s.p[0], s.p[1], s.x, s.cycle[0]});
  }
  if (s.q.size() == 1) {
    small_extend(g, f, OneVertex{s.q[0], s.y, s.cycle[2]});
  } else {
    small_extend(g, f, TwoVertex{s.q[0], s.q[1], s.y, s.cycle[2]});
  }
  ensure_covered(g, f, fresh, "add_c5_two_tails");
}

Configuration k24_config() { return make_configuration({{1, 2}, {3, 4}, {3, 5}, {4, 5}, {1, 5}, {2, 5}}); }

// ---------------------------------------------------------------------------

Orientation orient_min_indegree(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::set<Vertex>> rem(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto nb = g.neighbors(static_cast<Vertex>(v));
    rem[v].insert(nb.begin(), nb.end());
  }
  Orientation o;
  o.arcs.reserve(g.edge_count());
  auto drop = [&](Vertex tail, Vertex head) {
    rem[idx(tail)].erase(head);
    rem[idx(head)].erase(tail);
    o.arcs.push_back({tail, head});
  };
  std::vector<Vertex> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (rem[v].size() == 1) leaves.push_back(static_cast<Vertex>(v));
  }
  std::vector<int> pos(n, -1);
  std::size_t scan = 0;
  while (true) {
    while (!leaves.empty()) {
      const Vertex v = leaves.back();
      leaves.pop_back();
      if (rem[idx(v)].size() != 1) continue;
      const Vertex w = *rem[idx(v)].begin();
      // An isolated edge may go either way; prefer the higher original degree.
      if (rem[idx(w)].size() == 1 && g.degree(v) > g.degree(w)) {
        drop(w, v);
        continue;
      }
      drop(v, w);
      if (rem[idx(w)].size() == 1) leaves.push_back(w);
    }
    while (scan < n && rem[scan].empty()) ++scan;
    if (scan == n) break;
    // Every remaining degree is at least 2, so a walk closes a cycle.
    std::vector<Vertex> walk{static_cast<Vertex>(scan)};
    pos[scan] = 0;
    Vertex prev = -1;
    while (true) {
      const Vertex cur = walk.back();
      Vertex next = -1;
      for (Vertex w : rem[idx(cur)]) {
        if (w != prev) {
          next = w;
          break;
        }
      }
      if (pos[idx(next)] >= 0) {
        const auto start = static_cast<std::size_t>(pos[idx(next)]);
        std::vector<Vertex> cyc(walk.begin() + static_cast<std::ptrdiff_t>(start), walk.end());
        for (Vertex v : walk) pos[idx(v)] = -1;
        for (std::size_t i = 0; i < cyc.size(); ++i) drop(cyc[i], cyc[(i + 1) % cyc.size()]);
        for (Vertex v : cyc) {
          if (rem[idx(v)].size() == 1) leaves.push_back(v);
        }
        break;
      }
      pos[idx(next)] = static_cast<int>(walk.size());
      walk.push_back(next);
      prev = cur;
    }
  }
  return o;
}

std::vector<std::size_t> in_degrees(std::size_t n, const Orientation& o) {
  std::vector<std::size_t> d(n, 0);
  for (const Edge& a : o.arcs) ++d[idx(a.v)];
  return d;
}

}  // namespace sensorcfg
