#include "detail.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sensorcfg/oracle.hpp"

namespace sensorcfg::detail {

std::optional<LabelPermutation> first_permutation(const std::function<bool(const LabelPermutation&)>& pred) {
  for (const auto& p : LabelPermutation::all()) {
    if (pred(p)) return p;
  }
  return std::nullopt;
}

LabelPair pad_to_pair(LabelSet required, LabelSet avoid) {
  if (required.size() > 2) throw std::logic_error("pad_to_pair: more than two required labels");
  LabelSet s = required;
  for (Label l = 1; l <= kLabelCount && s.size() < 2; ++l) {
    if (!avoid.contains(l)) s.insert(l);
  }
  for (Label l = 1; l <= kLabelCount && s.size() < 2; ++l) s.insert(l);
  return LabelPair::from_set(s);
}

bool complete_by_search(const Graph& g, PartialConfiguration& f, std::span<const Vertex> fresh) {
  if (fresh.empty()) return true;
  std::vector<Vertex> keep(fresh.begin(), fresh.end());
  std::vector<char> in_keep(g.size(), 0);
  for (Vertex v : keep) in_keep[idx(v)] = 1;
  for (Vertex v : fresh) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_keep[idx(w)] && f.is_assigned(w)) {
        in_keep[idx(w)] = 1;
        keep.push_back(w);
      }
    }
  }
  Subgraph sub = induced(g, keep);
  AssignmentQuery q;
  q.fixed = PartialConfiguration(keep.size());
  q.exempt.assign(keep.size(), 0);
  for (std::size_t i = fresh.size(); i < keep.size(); ++i) {
    q.fixed.assign(static_cast<Vertex>(i), f.at(keep[i]));
    q.exempt[i] = 1;
  }
  std::optional<PartialConfiguration> found;
  OracleBudget budget;
  budget.node_limit = 50'000'000;
  auto rep = search_assignments(sub.graph, q, budget, [&](const PartialConfiguration& sol) {
    found = sol;
    return false;
  });
  if (rep.status == SearchStatus::BudgetExceeded) throw std::logic_error("local search ran out of budget");
  if (!found) return false;
  for (std::size_t i = 0; i < fresh.size(); ++i) f.assign(fresh[i], found->at(static_cast<Vertex>(i)));
  return true;
}

std::optional<Configuration> exact_configuration(const Graph& g) {
  OracleResult r = exact_solve(g);
  if (r.outcome == OracleOutcome::BudgetExceeded) throw std::logic_error("exact search ran out of budget");
  return r.configuration;
}

std::vector<std::vector<Vertex>> automorphisms(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 8) throw std::invalid_argument("automorphisms: graph too large");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = g.edges();
  std::vector<std::vector<Vertex>> out;
  do {
    bool ok = true;
    for (const Edge& e : edges) {
      if (!g.has_edge(perm[idx(e.u)], perm[idx(e.v)])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool all_covered(const Graph& g, const PartialConfiguration& f, std::span<const Vertex> vs) {
  return std::all_of(vs.begin(), vs.end(),
                     [&](Vertex v) { return closed_neighborhood_labels(g, f, v) == LabelSet::full(); });
}

}  // namespace sensorcfg::detail
