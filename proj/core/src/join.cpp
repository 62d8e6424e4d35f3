// Joining two labeled parts and near-configurations of the small
// non-configurable graphs.

#include <array>
#include <mutex>

#include "detail.hpp"
#include "sensorcfg/lemmas.hpp"
#include "sensorcfg/oracle.hpp"

namespace sensorcfg {

namespace {

using detail::idx;

constexpr LabelSet kFull = LabelSet::full();

LabelPair P(int code) { return LabelPair(code / 10, code % 10); }

// What the join needs to know about one side: the end vertex's labels and
// the labels it already sees inside its own part.
struct Side {
  LabelPair own;
  LabelSet seen;
  LabelSet missing() const { return kFull.minus(seen); }
};

// Side 2 is relabeled by `sigma`; `interior` lists labels between the ends.
struct JoinPlan {
  LabelPermutation sigma;
  std::vector<LabelPair> interior;
};

bool plan_works(const Side& s1, const Side& s2, bool merged, const JoinPlan& p) {
  if (merged) return p.sigma(s2.own) == s1.own && (s1.seen | p.sigma(s2.seen)) == kFull;
  std::vector<LabelPair> seq{s1.own};
  seq.insert(seq.end(), p.interior.begin(), p.interior.end());
  seq.push_back(p.sigma(s2.own));
  if ((s1.seen | seq[1].set()) != kFull) return false;
  if ((p.sigma(s2.seen) | seq[seq.size() - 2].set()) != kFull) return false;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if ((seq[i - 1].set() | seq[i].set() | seq[i + 1].set()) != kFull) return false;
  }
  return true;
}

std::optional<JoinPlan> brute_force_plan(const Side& s1, const Side& s2, std::size_t t, bool merged) {
  const auto& pairs = LabelPair::all();
  for (const auto& sigma : LabelPermutation::all()) {
    JoinPlan p{sigma, std::vector<LabelPair>(t, P(12))};
    std::size_t combos = 1;
    for (std::size_t i = 0; i < t; ++i) combos *= pairs.size();
    for (std::size_t c = 0; c < combos; ++c) {
      std::size_t rest = c;
      for (std::size_t i = 0; i < t; ++i) {
        p.interior[i] = pairs[rest % pairs.size()];
        rest /= pairs.size();
      }
      if (plan_works(s1, s2, merged, p)) return p;
    }
  }
  return std::nullopt;
}

// Combines per-side normal frames tau1, tau2 (interior given in the common
// frame) into a plan that leaves side 1 untouched.
JoinPlan from_frames(const LabelPermutation& tau1, const LabelPermutation& tau2, std::vector<LabelPair> interior) {
  const LabelPermutation back = tau1.inverse();
  for (auto& p : interior) p = back(p);
  return {tau2.then(back), std::move(interior)};
}

std::optional<JoinPlan> plan_join(const Side& s1, const Side& s2, std::size_t t, bool merged) {
  const LabelSet m1 = s1.missing();
  const LabelSet m2 = s2.missing();
  if (!merged && t >= 3) {
    auto shorter = plan_join(s1, s2, t - 3, false);
    if (!shorter) return std::nullopt;
    const LabelPair next = shorter->interior.empty() ? shorter->sigma(s2.own) : shorter->interior.front();
    const auto three = contraction_lift(s1.own, next);
    shorter->interior.insert(shorter->interior.begin(), three.begin(), three.end());
    if (plan_works(s1, s2, false, *shorter)) return shorter;
    return brute_force_plan(s1, s2, t, false);
  }
  if (!merged && t == 1) {
    // One end misses at most one color (sent to 3), the other at most two
    // (3 and some c); the middle vertex takes {c,3}.
    auto attempt = [&](const Side& a, const Side& b, bool swapped) -> std::optional<JoinPlan> {
      if (a.missing().size() > 1 || b.missing().size() > 2) return std::nullopt;
      const auto ta = detail::first_permutation([&](const LabelPermutation& s) {
        return s(a.own) == P(12) && s(a.missing()).is_subset_of(LabelSet{3});
      });
      const auto tb = detail::first_permutation([&](const LabelPermutation& s) {
        const LabelSet m = s(b.missing());
        return s(b.own) == P(45) && m.is_subset_of(LabelSet{1, 2, 3}) && (m.size() < 2 || m.contains(3));
      });
      if (!ta || !tb) return std::nullopt;
      const LabelSet rest = (*tb)(b.missing()).minus(LabelSet{3});
      const Label c = rest.empty() ? 1 : rest.min();
      std::vector<LabelPair> mid{LabelPair(c, 3)};
      return swapped ? from_frames(*tb, *ta, mid) : from_frames(*ta, *tb, mid);
    };
    auto p = attempt(s1, s2, false);
    if (!p) p = attempt(s2, s1, true);
    if (p && plan_works(s1, s2, false, *p)) return p;
    return brute_force_plan(s1, s2, t, false);
  }
  if (!merged && t == 2 && m1.size() <= 2 && m2.size() <= 2) {
    // v1 -> {1,2} missing within {3,4}; v2 -> {1,3} or {1,4} missing within
    // {2,5}; the interior is {3,4} followed by the four-vertex completion.
    const auto t1 = detail::first_permutation([&](const LabelPermutation& s) {
      return s(s1.own) == P(12) && s(m1).is_subset_of(LabelSet{3, 4});
    });
    const auto t2 = detail::first_permutation([&](const LabelPermutation& s) {
      return (s(s2.own) == P(13) || s(s2.own) == P(14)) && s(m2).is_subset_of(LabelSet{2, 5});
    });
    if (t1 && t2) {
      const LabelPair far = (*t2)(s2.own);
      auto p = from_frames(*t1, *t2, {P(34), path3_completion(P(12), far, P(34))});
      if (plan_works(s1, s2, false, p)) return p;
    }
  }
  return brute_force_plan(s1, s2, merged ? 0 : t, merged);
}

}  // namespace

PartialConfiguration join_via_path(const Graph& g, const PartialConfiguration& f1, Vertex v1,
                                   const PartialConfiguration& f2, Vertex v2, std::span<const Vertex> interior) {
  if (f1.size() != g.size() || f2.size() != g.size()) throw LemmaError("join: configuration size mismatch");
  if (v1 < 0 || idx(v1) >= g.size() || v2 < 0 || idx(v2) >= g.size()) throw LemmaError("join: end out of range");
  if (!f1.is_assigned(v1) || !f2.is_assigned(v2)) throw LemmaError("join: ends must be labeled");
  const bool merged = v1 == v2;
  if (merged && !interior.empty()) throw LemmaError("join: a shared end takes no interior");
  std::vector<Vertex> chain{v1};
  chain.insert(chain.end(), interior.begin(), interior.end());
  if (!merged) chain.push_back(v2);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!g.has_edge(chain[i], chain[i + 1])) throw LemmaError("join: path edge missing");
  }
  for (Vertex v : interior) {
    if (f1.is_assigned(v) || f2.is_assigned(v)) throw LemmaError("join: interior must be unlabeled");
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto vv = static_cast<Vertex>(v);
    if (f1.is_assigned(vv) && f2.is_assigned(vv) && !(merged && vv == v1)) {
      throw LemmaError("join: parts overlap");
    }
  }

  const Side s1{f1.at(v1), closed_neighborhood_labels(g, f1, v1)};
  const Side s2{f2.at(v2), closed_neighborhood_labels(g, f2, v2)};
  const auto plan = plan_join(s1, s2, interior.size(), merged);
  if (!plan) throw LemmaError("join: no completion exists for these ends");

  PartialConfiguration out = f1;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto vv = static_cast<Vertex>(v);
    if (f2.is_assigned(vv) && !(merged && vv == v1)) out.assign(vv, plan->sigma(f2.at(vv)));
  }
  for (std::size_t i = 0; i < interior.size(); ++i) out.assign(interior[i], plan->interior[i]);
  const std::array<Vertex, 2> ends{v1, v2};
  if (!detail::all_covered(g, out, ends) || !detail::all_covered(g, out, interior)) {
    throw std::logic_error("join: planned labels leave a vertex unsatisfied");
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t missing_bound(ExceptionalKind kind) { return kind == ExceptionalKind::C4 ? 2 : 1; }

std::vector<Configuration> compute_almost(ExceptionalKind kind) {
  const Graph& g = reference_graph(kind);
  std::vector<Configuration> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    AssignmentQuery q;
    q.exempt.assign(g.size(), 0);
    q.exempt[v] = 1;
    std::optional<Configuration> found;
    const auto vv = static_cast<Vertex>(v);
    search_assignments(g, q, {}, [&](const PartialConfiguration& f) {
      if (missing_colors(g, f, vv).size() <= static_cast<int>(missing_bound(kind))) {
        found = Configuration(f);
        return false;
      }
      return true;
    });
    if (!found) throw std::logic_error("no near-configuration for " + std::string(to_string(kind)));
    out.push_back(std::move(*found));
  }
  return out;
}

}  // namespace

const Configuration& almost_satisfy_exceptional(ExceptionalKind kind, Vertex v) {
  static std::once_flag once;
  static std::array<std::vector<Configuration>, 4> cache;
  const std::array<ExceptionalKind, 4> kinds{ExceptionalKind::C4, ExceptionalKind::C7, ExceptionalKind::C4dotC4,
                                             ExceptionalKind::K23};
  std::size_t slot = kinds.size();
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i] == kind) slot = i;
  }
  if (slot == kinds.size()) throw LemmaError("near-configurations exist only for C4, C7, C4.C4 and K23");
  const Graph& g = reference_graph(kind);
  if (v < 0 || idx(v) >= g.size()) throw LemmaError("vertex not in the reference graph");
  std::call_once(once, [&] {
    for (std::size_t i = 0; i < kinds.size(); ++i) cache[i] = compute_almost(kinds[i]);
  });
  return cache[slot][idx(v)];
}

}  // namespace sensorcfg
