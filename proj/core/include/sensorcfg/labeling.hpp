#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sensorcfg/graph.hpp"

namespace sensorcfg {

/// A label is one of 1..5.
using Label = int;
inline constexpr int kLabelCount = 5;

class LabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subset of {1..5}, bit (l-1) set iff label l is present.
class LabelSet {
 public:
  constexpr LabelSet() = default;
  constexpr explicit LabelSet(std::uint8_t bits) : bits_(bits & kFullBits) {}
  constexpr LabelSet(std::initializer_list<Label> labels) {
    for (Label l : labels) insert(l);
  }
  static constexpr LabelSet full() { return LabelSet(kFullBits); }

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Label l) const { return l >= 1 && l <= kLabelCount && ((bits_ >> (l - 1)) & 1U); }
  constexpr void insert(Label l) {
    if (l < 1 || l > kLabelCount) throw LabelError("label out of range: " + std::to_string(l));
    bits_ = static_cast<std::uint8_t>(bits_ | (1U << (l - 1)));
  }
  constexpr LabelSet operator|(LabelSet o) const { return LabelSet(static_cast<std::uint8_t>(bits_ | o.bits_)); }
  constexpr LabelSet operator&(LabelSet o) const { return LabelSet(static_cast<std::uint8_t>(bits_ & o.bits_)); }
  constexpr LabelSet complement() const { return LabelSet(static_cast<std::uint8_t>(~bits_)); }
  constexpr LabelSet minus(LabelSet o) const { return LabelSet(static_cast<std::uint8_t>(bits_ & ~o.bits_)); }
  constexpr bool is_subset_of(LabelSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<Label> labels() const;
  /// Smallest label in the set; the set must be non-empty.
  Label min() const { return std::countr_zero(bits_) + 1; }

  friend constexpr bool operator==(LabelSet, LabelSet) = default;

 private:
  static constexpr std::uint8_t kFullBits = 0x1F;
  std::uint8_t bits_ = 0;
};

/// Unordered pair of distinct labels, stored canonically (smaller first).
class LabelPair {
 public:
  constexpr LabelPair(Label a, Label b) {
    if (a == b || a < 1 || a > kLabelCount || b < 1 || b > kLabelCount) {
      throw LabelError("invalid label pair {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    lo_ = static_cast<std::uint8_t>(a < b ? a : b);
    hi_ = static_cast<std::uint8_t>(a < b ? b : a);
  }
  /// Throws LabelError unless `s` has exactly two elements.
  static LabelPair from_set(LabelSet s);

  constexpr Label first() const { return lo_; }
  constexpr Label second() const { return hi_; }
  constexpr LabelSet set() const { return LabelSet{lo_, hi_}; }
  constexpr bool contains(Label l) const { return l == lo_ || l == hi_; }
  /// Position in the lexicographic enumeration {1,2},{1,3},...,{4,5}.
  int index() const;

  /// The ten pairs in lexicographic order.
  static const std::array<LabelPair, 10>& all();

  friend constexpr auto operator<=>(const LabelPair&, const LabelPair&) = default;

 private:
  std::uint8_t lo_ = 1;
  std::uint8_t hi_ = 2;
};

std::string to_string(LabelPair p);

/// Bijection on {1..5}; image[l-1] is the image of l.
class LabelPermutation {
 public:
  constexpr LabelPermutation() : image_{1, 2, 3, 4, 5} {}
  /// Throws LabelError if `image` is not a bijection on {1..5}.
  explicit LabelPermutation(const std::array<Label, 5>& image);

  Label operator()(Label l) const { return image_[static_cast<std::size_t>(l - 1)]; }
  LabelSet operator()(LabelSet s) const;
  LabelPair operator()(LabelPair p) const { return {(*this)(p.first()), (*this)(p.second())}; }
  LabelPermutation inverse() const;
  /// (a.then(b))(l) == b(a(l)).
  LabelPermutation then(const LabelPermutation& next) const;
  const std::array<Label, 5>& image() const { return image_; }

  /// All 120 permutations, lexicographic in their image tuples.
  static const std::vector<LabelPermutation>& all();

  friend bool operator==(const LabelPermutation&, const LabelPermutation&) = default;

 private:
  std::array<Label, 5> image_;
};

/// Assignment of label pairs to some of the vertices of a graph.
class PartialConfiguration {
 public:
  PartialConfiguration() = default;
  explicit PartialConfiguration(std::size_t n) : pairs_(n) {}

  std::size_t size() const { return pairs_.size(); }
  bool is_assigned(Vertex v) const { return pairs_[static_cast<std::size_t>(v)].has_value(); }
  /// Throws LabelError if v is unassigned.
  LabelPair at(Vertex v) const;
  std::optional<LabelPair> get(Vertex v) const { return pairs_[static_cast<std::size_t>(v)]; }
  /// Labels of v, or the empty set if unassigned.
  LabelSet labels(Vertex v) const;

  void assign(Vertex v, LabelPair p) { pairs_[static_cast<std::size_t>(v)] = p; }
  void unassign(Vertex v) { pairs_[static_cast<std::size_t>(v)].reset(); }

  std::size_t assigned_count() const;
  bool is_complete() const { return assigned_count() == size(); }

  friend bool operator==(const PartialConfiguration&, const PartialConfiguration&) = default;

 private:
  std::vector<std::optional<LabelPair>> pairs_;
};

/// Total assignment of label pairs. Whether it is a valid configuration of a
/// given graph is decided by `verify`, not by construction.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<LabelPair> pairs);
  /// Throws LabelError if `partial` is not complete.
  explicit Configuration(const PartialConfiguration& partial);

  std::size_t size() const { return partial_.size(); }
  LabelPair operator[](Vertex v) const { return partial_.at(v); }
  const PartialConfiguration& partial() const { return partial_; }
  operator const PartialConfiguration&() const { return partial_; }  // NOLINT(google-explicit-constructor)

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  PartialConfiguration partial_;
};

/// Union of the labels assigned on N[v]; unassigned vertices contribute nothing.
LabelSet closed_neighborhood_labels(const Graph& g, const PartialConfiguration& f, Vertex v);
/// Union over the open neighborhood N(v).
LabelSet open_neighborhood_labels(const Graph& g, const PartialConfiguration& f, Vertex v);

/// Throws LabelError if some vertex of N[v] is unassigned.
bool is_satisfied(const Graph& g, const PartialConfiguration& f, Vertex v);
LabelSet missing_colors(const Graph& g, const PartialConfiguration& f, Vertex v);

/// Unsatisfied vertices in increasing order; empty certifies a configuration.
/// Throws LabelError if f is not total on g.
std::vector<Vertex> verify(const Graph& g, const Configuration& f);

PartialConfiguration permute_labels(const PartialConfiguration& f, const LabelPermutation& sigma);
Configuration permute_labels(const Configuration& f, const LabelPermutation& sigma);

/// Lexicographically least pair-index encoding over all 120 relabelings;
/// equal iff the two configurations differ by a label permutation.
std::vector<int> canonical_form(const Configuration& f);

/// Configuration given as literal pairs, e.g. {{1,4},{2,5},...}.
Configuration make_configuration(std::initializer_list<std::pair<Label, Label>> pairs);

// ---------------------------------------------------------------------------
// r-configurations over an arbitrary integer label universe.

struct RConfiguration {
  int r = 1;
  /// sets[v] holds the labels of v, each in 1..universe.
  std::vector<std::vector<int>> sets;
  int universe = 0;
};

/// Distinct labels used anywhere, i.e. |R(f)|.
std::size_t r_size(const RConfiguration& f);
/// True iff every used label appears on every closed neighborhood. Throws
/// LabelError if some set does not have exactly r distinct labels.
bool verify_r_configuration(const Graph& g, const RConfiguration& f);

}  // namespace sensorcfg
