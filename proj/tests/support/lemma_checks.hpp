#pragma once

#include <random>
#include <set>
#include <sstream>
#include <string>

#include "sensorcfg/lemmas.hpp"
#include "support/oracles.hpp"

namespace testing_checks {

using namespace sensorcfg;
namespace orc = testing_oracles;

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return cases > 0 && failures == 0; }
};

inline std::string pair_str(LabelPair p) { return to_string(p); }

/// Every (f(x), f(y)) combination and k = 3..12, checked on the bare path,
/// plus the host form on a configured C5 for every anchor pair.
inline Tally check_attached_path_table() {
  Tally t;
  std::set<std::pair<int, std::size_t>> regimes;
  for (const LabelPair& fx : LabelPair::all()) {
    for (const LabelPair& fy : LabelPair::all()) {
      for (std::size_t k = 3; k <= 12; ++k) {
        ++t.cases;
        regimes.insert({(fx.set() & fy.set()).size(), k % 3});
        std::vector<LabelPair> labels;
        try {
          labels = attached_path_labels(fx, fy, k);
        } catch (const std::exception& e) {
          t.fail(pair_str(fx) + " " + pair_str(fy) + " k=" + std::to_string(k) + ": " + e.what());
          continue;
        }
        if (labels.size() != k) {
          t.fail("wrong length");
          continue;
        }
        // Path x v1 .. vk y; only the vi must be satisfied.
        for (std::size_t i = 0; i < k; ++i) {
          const LabelSet left = i == 0 ? fx.set() : labels[i - 1].set();
          const LabelSet right = i + 1 == k ? fy.set() : labels[i + 1].set();
          if ((left | right | labels[i].set()) != LabelSet::full()) {
            t.fail(pair_str(fx) + " " + pair_str(fy) + " k=" + std::to_string(k) + " v" + std::to_string(i + 1));
            break;
          }
        }
      }
    }
  }
  if (regimes.size() != 9) t.fail("not all nine regimes covered");

  const Graph c5 = cycle_graph(5);
  const Configuration base = make_configuration({{1, 4}, {2, 5}, {1, 3}, {2, 4}, {3, 5}});
  for (Vertex x = 0; x < 5; ++x) {
    for (Vertex y = 0; y < 5; ++y) {
      for (std::size_t k = 3; k <= 12; ++k) {
        ++t.cases;
        const Graph g = attached_path_graph(c5, k, x, y);
        PartialConfiguration f(g.size());
        for (Vertex v = 0; v < 5; ++v) f.assign(v, base[v]);
        std::vector<Vertex> path;
        for (std::size_t i = 0; i < k; ++i) path.push_back(static_cast<Vertex>(5 + i));
        try {
          extend_attached_path(g, f, path, x, y);
        } catch (const std::exception& e) {
          t.fail(std::string("host form: ") + e.what());
          continue;
        }
        bool kept = true;
        for (Vertex v = 0; v < 5; ++v) kept = kept && f.at(v) == base[v];
        if (!kept || !f.is_complete() || !orc::is_configuration(g, Configuration(f))) {
          t.fail("host form x=" + std::to_string(x) + " y=" + std::to_string(y) + " k=" + std::to_string(k));
        }
      }
    }
  }
  return t;
}

struct StarLayout {
  Graph graph;
  StarSpec spec;
  std::vector<Vertex> anchors;
};

/// Anchors 0..a+b-1 (isolated apart from the rays), then center, x's, y's, z's.
inline StarLayout star_layout(std::size_t alpha, std::size_t beta) {
  StarLayout s;
  const std::size_t anchors = alpha + beta;
  Vertex next = static_cast<Vertex>(anchors);
  s.spec.center = next++;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < alpha; ++i) {
    const Vertex x = next++;
    s.spec.x.push_back(x);
    s.spec.u.push_back(static_cast<Vertex>(i));
    edges.push_back({s.spec.center, x});
    edges.push_back({x, static_cast<Vertex>(i)});
  }
  for (std::size_t j = 0; j < beta; ++j) {
    const Vertex y = next++;
    const Vertex z = next++;
    s.spec.y.push_back(y);
    s.spec.z.push_back(z);
    s.spec.v.push_back(static_cast<Vertex>(alpha + j));
    edges.push_back({s.spec.center, y});
    edges.push_back({y, z});
    edges.push_back({z, static_cast<Vertex>(alpha + j)});
  }
  for (std::size_t i = 0; i < anchors; ++i) s.anchors.push_back(static_cast<Vertex>(i));
  s.graph = build_graph(static_cast<std::size_t>(next), edges);
  return s;
}

/// Admissible shapes with alpha + beta <= 5, every anchor labeling with the
/// first anchor fixed to {1,2} (all others are label permutations of these).
inline Tally check_star_exhaustive() {
  Tally t;
  for (std::size_t beta = 0; beta <= 5; ++beta) {
    for (std::size_t alpha = 0; alpha + beta <= 5; ++alpha) {
      if (alpha + beta == 0) continue;
      const bool admissible = alpha + beta >= 2 && (alpha + 3 * beta <= 9 || (alpha == 1 && beta == 3));
      if (star_shape_admissible(alpha, beta) != admissible) t.fail("admissibility disagrees");
      if (!admissible) continue;
      const StarLayout s = star_layout(alpha, beta);
      const std::size_t m = alpha + beta;
      std::size_t combos = 1;
      for (std::size_t i = 1; i < m; ++i) combos *= 10;
      for (std::size_t code = 0; code < combos; ++code) {
        ++t.cases;
        PartialConfiguration f(s.graph.size());
        f.assign(0, LabelPair(1, 2));
        std::size_t rest = code;
        for (std::size_t i = 1; i < m; ++i, rest /= 10) f.assign(static_cast<Vertex>(i), LabelPair::all()[rest % 10]);
        const PartialConfiguration before = f;
        try {
          extend_star(s.graph, f, s.spec);
        } catch (const std::exception& e) {
          t.fail("(" + std::to_string(alpha) + "," + std::to_string(beta) + ") code " + std::to_string(code) + ": " +
                 e.what());
          continue;
        }
        bool ok = f.is_complete();
        for (Vertex a : s.anchors) ok = ok && f.at(a) == before.at(a);
        if (ok) {
          const auto labels = orc::to_pairs(Configuration(f));
          for (std::size_t v = m; v < s.graph.size() && ok; ++v)
            ok = orc::closed_union(s.graph, labels, static_cast<Vertex>(v)) == 0x1F;
        }
        if (!ok) t.fail("(" + std::to_string(alpha) + "," + std::to_string(beta) + ") code " + std::to_string(code));
      }
    }
  }
  return t;
}

inline Tally check_orientation(std::size_t graphs, std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> nd(1, 100);
  std::uniform_real_distribution<double> pd(0.0, 0.15);
  for (std::size_t i = 0; i < graphs; ++i) {
    const Graph g = orc::random_graph(rng, nd(rng), pd(rng));
    ++t.cases;
    const Orientation o = orient_min_indegree(g);
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<std::size_t> in(g.size(), 0);
    bool ok = o.arcs.size() == g.edge_count();
    for (const Edge& a : o.arcs) {
      ok = ok && g.has_edge(a.u, a.v) && seen.insert({std::min(a.u, a.v), std::max(a.u, a.v)}).second;
      ++in[static_cast<std::size_t>(a.v)];
    }
    for (std::size_t v = 0; v < g.size() && ok; ++v) ok = in[v] >= g.degree(static_cast<Vertex>(v)) / 2;
    if (!ok) t.fail("graph " + std::to_string(i));
  }
  return t;
}

}  // namespace testing_checks
