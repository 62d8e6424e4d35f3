#include "sensorcfg/labeling.hpp"

#include <algorithm>
#include <set>

namespace sensorcfg {

std::vector<Label> LabelSet::labels() const {
  std::vector<Label> out;
  for (Label l = 1; l <= kLabelCount; ++l) {
    if (contains(l)) out.push_back(l);
  }
  return out;
}

LabelPair LabelPair::from_set(LabelSet s) {
  if (s.size() != 2) throw LabelError("label pair needs exactly two labels");
  auto ls = s.labels();
  return {ls[0], ls[1]};
}

int LabelPair::index() const {
  const auto& pairs = all();
  return static_cast<int>(std::find(pairs.begin(), pairs.end(), *this) - pairs.begin());
}

const std::array<LabelPair, 10>& LabelPair::all() {
  static const std::array<LabelPair, 10> pairs{LabelPair{1, 2}, LabelPair{1, 3}, LabelPair{1, 4}, LabelPair{1, 5},
                                               LabelPair{2, 3}, LabelPair{2, 4}, LabelPair{2, 5}, LabelPair{3, 4},
                                               LabelPair{3, 5}, LabelPair{4, 5}};
  return pairs;
}

std::string to_string(LabelPair p) {
  return "{" + std::to_string(p.first()) + "," + std::to_string(p.second()) + "}";
}

LabelPermutation::LabelPermutation(const std::array<Label, 5>& image) : image_(image) {
  LabelSet seen;
  for (Label l : image) {
    if (l < 1 || l > kLabelCount || seen.contains(l)) throw LabelError("label permutation is not a bijection");
    seen.insert(l);
  }
}

LabelSet LabelPermutation::operator()(LabelSet s) const {
  LabelSet out;
  for (Label l : s.labels()) out.insert((*this)(l));
  return out;
}

LabelPermutation LabelPermutation::inverse() const {
  std::array<Label, 5> inv{};
  for (Label l = 1; l <= kLabelCount; ++l) inv[static_cast<std::size_t>((*this)(l) - 1)] = l;
  return LabelPermutation(inv);
}

LabelPermutation LabelPermutation::then(const LabelPermutation& next) const {
  std::array<Label, 5> img{};
  for (Label l = 1; l <= kLabelCount; ++l) img[static_cast<std::size_t>(l - 1)] = next((*this)(l));
  return LabelPermutation(img);
}

const std::vector<LabelPermutation>& LabelPermutation::all() {
  static const std::vector<LabelPermutation> perms = [] {
    std::vector<LabelPermutation> out;
    std::array<Label, 5> img{1, 2, 3, 4, 5};
    do {
      out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }();
  return perms;
}

LabelPair PartialConfiguration::at(Vertex v) const {
  const auto& p = pairs_[static_cast<std::size_t>(v)];
  if (!p) throw LabelError("vertex " + std::to_string(v) + " is unassigned");
  return *p;
}

LabelSet PartialConfiguration::labels(Vertex v) const {
  const auto& p = pairs_[static_cast<std::size_t>(v)];
  return p ? p->set() : LabelSet{};
}

std::size_t PartialConfiguration::assigned_count() const {
  return static_cast<std::size_t>(std::count_if(pairs_.begin(), pairs_.end(), [](const auto& p) { return p.has_value(); }));
}

Configuration::Configuration(std::vector<LabelPair> pairs) : partial_(pairs.size()) {
  for (std::size_t v = 0; v < pairs.size(); ++v) partial_.assign(static_cast<Vertex>(v), pairs[v]);
}

Configuration::Configuration(const PartialConfiguration& partial) : partial_(partial) {
  if (!partial.is_complete()) throw LabelError("configuration must assign every vertex");
}

LabelSet closed_neighborhood_labels(const Graph& g, const PartialConfiguration& f, Vertex v) {
  LabelSet seen = f.labels(v);
  for (Vertex u : g.neighbors(v)) seen = seen | f.labels(u);
  return seen;
}

LabelSet open_neighborhood_labels(const Graph& g, const PartialConfiguration& f, Vertex v) {
  LabelSet seen;
  for (Vertex u : g.neighbors(v)) seen = seen | f.labels(u);
  return seen;
}

bool is_satisfied(const Graph& g, const PartialConfiguration& f, Vertex v) {
  if (!f.is_assigned(v)) throw LabelError("vertex " + std::to_string(v) + " is unassigned");
  for (Vertex u : g.neighbors(v)) {
    if (!f.is_assigned(u)) throw LabelError("vertex " + std::to_string(u) + " is unassigned");
  }
  return closed_neighborhood_labels(g, f, v) == LabelSet::full();
}

LabelSet missing_colors(const Graph& g, const PartialConfiguration& f, Vertex v) {
  return closed_neighborhood_labels(g, f, v).complement();
}

std::vector<Vertex> verify(const Graph& g, const Configuration& f) {
  if (f.size() != g.size()) throw LabelError("configuration size does not match graph order");
  std::vector<Vertex> bad;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!is_satisfied(g, f, static_cast<Vertex>(v))) bad.push_back(static_cast<Vertex>(v));
  }
  return bad;
}

PartialConfiguration permute_labels(const PartialConfiguration& f, const LabelPermutation& sigma) {
  PartialConfiguration out(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (auto p = f.get(static_cast<Vertex>(v))) out.assign(static_cast<Vertex>(v), sigma(*p));
  }
  return out;
}

Configuration permute_labels(const Configuration& f, const LabelPermutation& sigma) {
  return Configuration(permute_labels(f.partial(), sigma));
}

std::vector<int> canonical_form(const Configuration& f) {
  std::vector<int> best;
  std::vector<int> code(f.size());
  for (const auto& sigma : LabelPermutation::all()) {
    for (std::size_t v = 0; v < f.size(); ++v) code[v] = sigma(f[static_cast<Vertex>(v)]).index();
    if (best.empty() || code < best) best = code;
  }
  return best;
}

Configuration make_configuration(std::initializer_list<std::pair<Label, Label>> pairs) {
  std::vector<LabelPair> out;
  for (const auto& [a, b] : pairs) out.emplace_back(a, b);
  return Configuration(std::move(out));
}

std::size_t r_size(const RConfiguration& f) {
  std::set<int> used;
  for (const auto& s : f.sets) used.insert(s.begin(), s.end());
  return used.size();
}

bool verify_r_configuration(const Graph& g, const RConfiguration& f) {
  if (f.sets.size() != g.size()) throw LabelError("r-configuration size does not match graph order");
  for (const auto& s : f.sets) {
    std::set<int> distinct(s.begin(), s.end());
    if (distinct.size() != s.size() || s.size() != static_cast<std::size_t>(f.r)) {
      throw LabelError("every vertex must carry exactly r distinct labels");
    }
  }
  std::set<int> used;
  for (const auto& s : f.sets) used.insert(s.begin(), s.end());
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::set<int> seen(f.sets[v].begin(), f.sets[v].end());
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) {
      const auto& su = f.sets[static_cast<std::size_t>(u)];
      seen.insert(su.begin(), su.end());
    }
    if (seen.size() != used.size()) return false;
  }
  return true;
}

}  // namespace sensorcfg
