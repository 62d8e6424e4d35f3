#include "sensorcfg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <unordered_set>

namespace sensorcfg {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

class Backtracker {
 public:
  Backtracker(const Graph& g, const AssignmentQuery& q, OracleBudget budget,
              const std::function<bool(const PartialConfiguration&)>& on_solution)
      : g_(g), q_(q), budget_(budget), on_solution_(on_solution), masks_(g.size(), 0),
        full_(static_cast<std::uint8_t>((1U << q.labels) - 1U)) {
    if (q.labels < 2 || q.labels > kLabelCount) throw std::invalid_argument("label universe must be 2..5");
    for (const LabelPair& p : LabelPair::all()) {
      if (p.second() <= q.labels) pairs_.push_back(p);
    }
    exempt_ = q.exempt;
    exempt_.resize(g.size(), 0);
    bool any_fixed = false;
    if (q.fixed.size() != 0 && q.fixed.size() != g.size()) throw std::invalid_argument("fixed assignment size mismatch");
    for (std::size_t v = 0; v < q.fixed.size(); ++v) {
      if (auto p = q.fixed.get(static_cast<Vertex>(v))) {
        masks_[v] = p->set().bits();
        any_fixed = true;
      }
    }
    symmetry_ = q.break_symmetry && !any_fixed;
    build_order();
    start_ = std::chrono::steady_clock::now();
  }

  SearchReport run() {
    if (q_.prune) {
      for (std::size_t w = 0; w < g_.size(); ++w) {
        if (!feasible(static_cast<Vertex>(w))) return {SearchStatus::Exhausted, 0};
      }
    }
    SearchStatus status = descend(0);
    return {status, nodes_};
  }

 private:
  void build_order() {
    std::vector<char> seen(g_.size(), 0);
    std::vector<Vertex> bfs;
    while (bfs.size() < g_.size()) {
      // Next root: unvisited vertex of maximum degree, smallest id on ties.
      Vertex root = -1;
      for (std::size_t v = 0; v < g_.size(); ++v) {
        if (seen[v]) continue;
        if (root < 0 || g_.degree(static_cast<Vertex>(v)) > g_.degree(root)) root = static_cast<Vertex>(v);
      }
      seen[idx(root)] = 1;
      std::size_t head = bfs.size();
      bfs.push_back(root);
      while (head < bfs.size()) {
        Vertex v = bfs[head++];
        for (Vertex u : g_.neighbors(v)) {
          if (!seen[idx(u)]) {
            seen[idx(u)] = 1;
            bfs.push_back(u);
          }
        }
      }
    }
    for (Vertex v : bfs) {
      if (masks_[idx(v)] == 0) order_.push_back(v);
    }
  }

  // Could N[w] still cover the universe given what is assigned?
  bool feasible(Vertex w) const {
    if (exempt_[idx(w)]) return true;
    std::uint8_t seen = masks_[idx(w)];
    int open = masks_[idx(w)] == 0 ? 1 : 0;
    for (Vertex u : g_.neighbors(w)) {
      seen |= masks_[idx(u)];
      if (masks_[idx(u)] == 0) ++open;
    }
    const int missing = std::popcount(static_cast<std::uint8_t>(full_ & ~seen));
    return open == 0 ? missing == 0 : missing <= 2 * open;
  }

  bool all_satisfied() const {
    for (std::size_t w = 0; w < g_.size(); ++w) {
      if (exempt_[w]) continue;
      std::uint8_t seen = masks_[w];
      for (Vertex u : g_.neighbors(static_cast<Vertex>(w))) seen |= masks_[idx(u)];
      if ((seen & full_) != full_) return false;
    }
    return true;
  }

  bool out_of_budget() {
    if (nodes_ >= budget_.node_limit) return true;
    if ((nodes_ & 1023U) == 0) {
      std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
      if (spent.count() > budget_.time_limit_seconds) return true;
    }
    return false;
  }

  std::vector<LabelPair> candidates(Vertex v) const {
    // Prefer pairs that cover the most colors still missing around v.
    std::vector<std::pair<int, LabelPair>> scored;
    std::vector<std::uint8_t> missing;
    auto consider = [&](Vertex w) {
      if (exempt_[idx(w)]) return;
      std::uint8_t seen = masks_[idx(w)];
      for (Vertex u : g_.neighbors(w)) seen |= masks_[idx(u)];
      missing.push_back(static_cast<std::uint8_t>(full_ & ~seen));
    };
    consider(v);
    for (Vertex w : g_.neighbors(v)) consider(w);
    for (const LabelPair& p : pairs_) {
      int score = 0;
      for (std::uint8_t m : missing) score += std::popcount(static_cast<std::uint8_t>(m & p.set().bits()));
      scored.emplace_back(-score, p);
    }
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LabelPair> out;
    for (const auto& [score, p] : scored) out.push_back(p);
    return out;
  }

  SearchStatus descend(std::size_t depth) {
    ++nodes_;
    if (out_of_budget()) return SearchStatus::BudgetExceeded;
    if (depth == order_.size()) {
      if (!q_.prune && !all_satisfied()) return SearchStatus::Exhausted;
      PartialConfiguration f(g_.size());
      for (std::size_t v = 0; v < g_.size(); ++v) {
        f.assign(static_cast<Vertex>(v), LabelPair::from_set(LabelSet(masks_[v])));
      }
      return on_solution_(f) ? SearchStatus::Exhausted : SearchStatus::Stopped;
    }
    const Vertex v = order_[depth];
    std::vector<LabelPair> options;
    if (symmetry_ && depth == 0) {
      options.push_back(LabelPair{1, 2});
    } else if (q_.prune) {
      options = candidates(v);
    } else {
      options = pairs_;
    }
    for (const LabelPair& p : options) {
      masks_[idx(v)] = p.set().bits();
      bool ok = true;
      if (q_.prune) {
        ok = feasible(v);
        for (Vertex w : g_.neighbors(v)) {
          if (!ok) break;
          ok = feasible(w);
        }
      }
      if (ok) {
        SearchStatus s = descend(depth + 1);
        if (s != SearchStatus::Exhausted) {
          masks_[idx(v)] = 0;
          return s;
        }
      }
    }
    masks_[idx(v)] = 0;
    return SearchStatus::Exhausted;
  }

  const Graph& g_;
  const AssignmentQuery& q_;
  OracleBudget budget_;
  const std::function<bool(const PartialConfiguration&)>& on_solution_;
  std::vector<std::uint8_t> masks_;
  std::uint8_t full_;
  std::vector<LabelPair> pairs_;
  std::vector<char> exempt_;
  std::vector<Vertex> order_;
  bool symmetry_ = false;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SearchReport search_assignments(const Graph& g, const AssignmentQuery& query, OracleBudget budget,
                                const std::function<bool(const PartialConfiguration&)>& on_solution) {
  Backtracker bt(g, query, budget, on_solution);
  return bt.run();
}

OracleResult exact_solve(const Graph& g, OracleBudget budget, OracleOptions options) {
  AssignmentQuery q;
  q.labels = options.labels;
  q.prune = options.prune;
  q.break_symmetry = options.break_symmetry;
  OracleResult result;
  std::optional<PartialConfiguration> found;
  SearchReport report = search_assignments(g, q, budget, [&](const PartialConfiguration& f) {
    found = f;
    return false;
  });
  result.nodes = report.nodes;
  if (found) {
    result.outcome = OracleOutcome::Configurable;
    result.configuration = Configuration(*found);
  } else if (report.status == SearchStatus::BudgetExceeded) {
    result.outcome = OracleOutcome::BudgetExceeded;
  } else {
    result.outcome = OracleOutcome::NotConfigurable;
  }
  return result;
}

int d2_max(const Graph& g, OracleBudget budget) {
  if (g.empty()) throw GraphError("d2_max of the empty graph");
  for (int t = kLabelCount; t >= 2; --t) {
    OracleOptions opts;
    opts.labels = t;
    OracleResult r = exact_solve(g, budget, opts);
    if (r.outcome == OracleOutcome::BudgetExceeded) throw BudgetExceededError("d2_max: search budget exceeded");
    if (r.outcome == OracleOutcome::Configurable) return t;
  }
  return 2;  // unreachable: every vertex labeled {1,2} covers a 2-label universe
}

// ---------------------------------------------------------------------------

namespace {

// Color refinement: iterate (color, sorted neighbor colors) until stable.
std::vector<int> refine_colors(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> color(n, 0);
  for (std::size_t v = 0; v < n; ++v) color[v] = static_cast<int>(g.degree(static_cast<Vertex>(v)));
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::vector<int>, std::size_t>> sigs(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> sig{color[v]};
      std::vector<int> nb;
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) nb.push_back(color[idx(u)]);
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      sigs[v] = {std::move(sig), v};
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& [sig, v] : sigs) ids.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) color[v] = ids[sigs[v].first];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return color;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 11) throw std::invalid_argument("canonical_code supports at most 11 vertices");
  const auto color = refine_colors(g);
  std::vector<std::vector<Vertex>> cells;
  {
    std::map<int, std::vector<Vertex>> by_color;
    for (std::size_t v = 0; v < n; ++v) by_color[color[v]].push_back(static_cast<Vertex>(v));
    for (auto& [c, members] : by_color) cells.push_back(std::move(members));
  }
  std::vector<Vertex> order;
  std::uint64_t best = ~std::uint64_t{0};
  auto code_of = [&](const std::vector<Vertex>& ord) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | (g.has_edge(ord[i], ord[j]) ? 1U : 0U);
    return code;
  };
  std::function<void(std::size_t)> permute_cell = [&](std::size_t c) {
    if (c == cells.size()) {
      best = std::min(best, code_of(order));
      return;
    }
    auto cell = cells[c];
    std::sort(cell.begin(), cell.end());
    do {
      order.insert(order.end(), cell.begin(), cell.end());
      permute_cell(c + 1);
      order.resize(order.size() - cell.size());
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  permute_cell(0);
  return best;
}

void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > 8) throw std::invalid_argument("connected graph enumeration supports 1..8 vertices");
  // Every connected graph on k+1 vertices has a non-cut vertex, so it arises
  // from a connected graph on k vertices by adding one vertex with a
  // non-empty neighborhood.
  std::vector<Graph> level{Graph(1)};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& base : level) {
      const auto base_edges = base.edges();
      for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
        auto edges = base_edges;
        for (std::size_t v = 0; v < k; ++v) {
          if (mask & (1U << v)) edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(k)});
        }
        Graph candidate = Graph::from_edges(k + 1, edges);
        if (seen.insert(canonical_code(candidate)).second) next.push_back(std::move(candidate));
      }
    }
    level = std::move(next);
  }
  for (const Graph& g : level) visit(g);
}

std::vector<Graph> enumerate_small_graphs(std::size_t n, const std::function<bool(const Graph&)>& keep) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) {
    if (keep(g)) out.push_back(g);
  });
  return out;
}

}  // namespace sensorcfg
