#include "sensorcfg/counterexamples.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "detail.hpp"
#include "sensorcfg/labeling.hpp"
#include "sensorcfg/oracle.hpp"

namespace sensorcfg {

using detail::idx;

std::string_view to_string(Role r) {
  switch (r) {
    case Role::Branch: return "branch";
    case Role::USubdivision: return "u-subdivision";
    case Role::VSubdivision: return "v-subdivision";
    case Role::Element: return "element";
    case Role::Set: return "set";
  }
  return "?";
}

void write_roles(std::ostream& out, const std::vector<Role>& roles) {
  for (std::size_t v = 0; v < roles.size(); ++v) out << v << ' ' << to_string(roles[v]) << '\n';
}

// ---------------------------------------------------------------------------

K19Family build_k19_family(std::size_t k) {
  if (k == 0) throw FamilyError("k must be at least 1");
  K19Family fam;
  fam.k = k;
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < k; ++c) {
    const auto base = static_cast<Vertex>(c * kK19GadgetSize);
    std::array<Vertex, 5> br{};
    for (int i = 0; i < 5; ++i) {
      br[static_cast<std::size_t>(i)] = base + i;
      fam.roles.push_back(Role::Branch);
    }
    fam.branches.push_back(br);
    Vertex next = base + 5;
    for (int x = 0; x < 5; ++x) {
      for (int y = x + 1; y < 5; ++y) {
        const Vertex u = next++;
        fam.roles.push_back(Role::USubdivision);
        edges.push_back({br[idx(x)], u});
        edges.push_back({u, br[idx(y)]});
        if (x == 0 && y == 1) continue;  // the pair a b keeps only u_ab
        const Vertex vx = next++;
        const Vertex vy = next++;
        fam.roles.push_back(Role::VSubdivision);
        fam.roles.push_back(Role::VSubdivision);
        edges.push_back({br[idx(x)], vx});
        edges.push_back({vx, vy});
        edges.push_back({vy, br[idx(y)]});
      }
    }
  }
  if (k >= 2) {
    for (std::size_t c = 0; c < k; ++c) edges.push_back({fam.branches[c][1], fam.branches[(c + 1) % k][0]});
  }
  fam.graph = build_graph(k * kK19GadgetSize, edges);
  return fam;
}

namespace {

// Labels for the middle of x-u-y (or x-v-v'-y) that satisfy every middle
// vertex, given f(x) and f(y).
bool middle_satisfiable(std::size_t middle, LabelPair fx, LabelPair fy) {
  const Graph g = path_graph(middle + 2);
  AssignmentQuery q;
  q.fixed = PartialConfiguration(g.size());
  q.fixed.assign(0, fx);
  q.fixed.assign(static_cast<Vertex>(g.size() - 1), fy);
  q.exempt.assign(g.size(), 0);
  q.exempt.front() = q.exempt.back() = 1;
  bool found = false;
  search_assignments(g, q, {}, [&](const PartialConfiguration&) {
    found = true;
    return false;
  });
  return found;
}

// Oracle confirmation of the two constraints the subdivision paths force.
bool gadget_constraints_hold() {
  for (const LabelPair& fx : LabelPair::all()) {
    for (const LabelPair& fy : LabelPair::all()) {
      if (fx == fy && middle_satisfiable(1, fx, fy)) return false;
      if ((fx.set() & fy.set()).empty() && middle_satisfiable(2, fx, fy)) return false;
    }
  }
  return true;
}

bool has_u_path(const Graph& g, const std::vector<Role>& roles, Vertex x, Vertex y) {
  for (Vertex u : g.neighbors(x)) {
    if (g.degree(u) == 2 && roles[idx(u)] == Role::USubdivision && g.has_edge(u, y)) return true;
  }
  return false;
}

bool has_v_path(const Graph& g, const std::vector<Role>& roles, Vertex x, Vertex y) {
  for (Vertex p : g.neighbors(x)) {
    if (g.degree(p) != 2 || roles[idx(p)] != Role::VSubdivision) continue;
    for (Vertex q : g.neighbors(p)) {
      if (q != x && g.degree(q) == 2 && roles[idx(q)] == Role::VSubdivision && g.has_edge(q, y)) return true;
    }
  }
  return false;
}

}  // namespace

bool check_k19_nonconfigurable(const K19Family& fam) {
  const Graph& g = fam.graph;
  if (fam.branches.empty() || fam.roles.size() != g.size()) throw FamilyError("graph is not tagged as a family");
  const auto& br = fam.branches.front();
  for (Vertex v : br) {
    if (v < 0 || idx(v) >= g.size() || fam.roles[idx(v)] != Role::Branch) throw FamilyError("bad branch tags");
  }
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (!has_u_path(g, fam.roles, br[i], br[j])) throw FamilyError("missing u-subdivision path");
      if (!(i == 0 && j == 1) && !has_v_path(g, fam.roles, br[i], br[j])) {
        throw FamilyError("missing v-subdivision path");
      }
    }
  }
  if (!gadget_constraints_hold()) return false;

  // Exhaust the 10^5 assignments to the branch vertices (a, b first).
  const auto& pairs = LabelPair::all();
  std::array<std::size_t, 5> pick{};
  for (std::size_t code = 0; code < 100'000; ++code) {
    std::size_t rest = code;
    for (auto& p : pick) {
      p = rest % 10;
      rest /= 10;
    }
    bool ok = true;
    for (std::size_t i = 0; i < 5 && ok; ++i) {
      for (std::size_t j = i + 1; j < 5 && ok; ++j) {
        const LabelPair& x = pairs[pick[i]];
        const LabelPair& y = pairs[pick[j]];
        if (x == y) ok = false;
        if (!(i == 0 && j == 1) && (x.set() & y.set()).empty()) ok = false;
      }
    }
    if (ok) return false;
  }
  return true;
}

std::size_t max_intersecting_pair_family() {
  const auto& pairs = LabelPair::all();
  std::size_t best = 0;
  for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t i = 0; i < pairs.size() && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      ++size;
      for (std::size_t j = i + 1; j < pairs.size() && ok; ++j) {
        if (((mask >> j) & 1U) && (pairs[i].set() & pairs[j].set()).empty()) ok = false;
      }
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

// ---------------------------------------------------------------------------

PigeonholeFamily build_pigeonhole_family(std::size_t k, std::size_t max_vertices) {
  if (k == 0) throw FamilyError("k must be at least 1");
  const std::size_t n = 10 * k - 9;
  // C(n, k) with an early exit once past the cap.
  std::size_t count = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    count = count * (n - k + i) / i;
    if (count + n > max_vertices) throw FamilyError("pigeonhole graph exceeds the vertex cap");
  }
  PigeonholeFamily fam;
  fam.k = k;
  fam.base_size = n;
  fam.roles.assign(n, Role::Element);
  std::vector<Edge> edges;
  std::vector<Vertex> members(k);
  for (std::size_t i = 0; i < k; ++i) members[i] = static_cast<Vertex>(i);
  for (;;) {
    const auto s = static_cast<Vertex>(n + fam.sets.size());
    for (Vertex b : members) edges.push_back({b, s});
    fam.sets.push_back(members);
    fam.roles.push_back(Role::Set);
    // Next k-subset in lexicographic order.
    std::size_t i = k;
    while (i > 0 && idx(members[i - 1]) == n - k + i - 1) --i;
    if (i == 0) break;
    ++members[i - 1];
    for (std::size_t j = i; j < k; ++j) members[j] = members[j - 1] + 1;
  }
  fam.graph = build_graph(n + fam.sets.size(), edges);
  return fam;
}

bool check_pigeonhole(const PigeonholeFamily& fam) {
  const Graph& g = fam.graph;
  const std::size_t n = fam.base_size;
  if (fam.k == 0 || n != 10 * fam.k - 9 || fam.roles.size() != g.size() || g.size() != n + fam.sets.size()) {
    throw FamilyError("graph is not tagged as a pigeonhole family");
  }
  for (std::size_t s = 0; s < fam.sets.size(); ++s) {
    const auto sv = static_cast<Vertex>(n + s);
    if (fam.roles[idx(sv)] != Role::Set || g.degree(sv) != fam.k) throw FamilyError("bad set vertex");
    for (Vertex b : fam.sets[s]) {
      if (!g.has_edge(sv, b)) throw FamilyError("set vertex misses a member");
    }
  }

  // 10 pairs and 10k - 9 elements: some k elements share a pair.
  if (n <= 10 * (fam.k - 1)) return false;

  // Witness: the round-robin assignment puts pair 0 on 0, 10, ..., 10(k-1).
  const auto& pairs = LabelPair::all();
  std::vector<Vertex> same;
  for (std::size_t b = 0; b < n; b += 10) same.push_back(static_cast<Vertex>(b));
  if (same.size() != fam.k) return false;
  const auto it = std::find(fam.sets.begin(), fam.sets.end(), same);
  if (it == fam.sets.end()) return false;
  const auto witness = static_cast<Vertex>(n + static_cast<std::size_t>(it - fam.sets.begin()));
  for (const LabelPair& own : pairs) {
    std::vector<LabelPair> f;
    for (std::size_t v = 0; v < g.size(); ++v) f.push_back(v < n ? pairs[v % pairs.size()] : pairs.front());
    f[idx(witness)] = own;
    const auto bad = verify(g, Configuration(f));
    if (std::find(bad.begin(), bad.end(), witness) == bad.end()) return false;
  }

  if (fam.k == 1) return exact_solve(g).outcome == OracleOutcome::NotConfigurable;
  return true;
}

}  // namespace sensorcfg
