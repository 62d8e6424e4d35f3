#pragma once

// Two families of non-configurable graphs: one of maximum degree 8 without an
// induced K_{1,9}, and one of arbitrarily large minimum degree.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sensorcfg/graph.hpp"

namespace sensorcfg {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Role { Branch, USubdivision, VSubdivision, Element, Set };
std::string_view to_string(Role r);

/// k copies of the gadget H chained by edges b_i a_{i+1} and b_k a_1.
/// H is K5 on branch vertices {a, b, c, d, e} with every edge xy replaced by
/// a path x u_xy y and a path x v v' y, except that the second path is left
/// out for the edge ab. For k = 1 the closing edge b_1 a_1 is also left out.
struct K19Family {
  std::size_t k = 0;
  Graph graph;
  /// Per copy: branch vertex ids, a and b first.
  std::vector<std::array<Vertex, 5>> branches;
  std::vector<Role> roles;
};

inline constexpr std::size_t kK19GadgetSize = 33;

K19Family build_k19_family(std::size_t k);

/// Certifies non-configurability: every assignment of pairs to one copy's
/// branch vertices breaks a constraint forced by the subdivision paths.
/// Throws FamilyError if the graph does not carry the gadget structure the
/// tags describe.
bool check_k19_nonconfigurable(const K19Family& fam);

/// Largest family of pairwise-intersecting 2-subsets of {1..5} (brute force
/// over all 2^10 families).
std::size_t max_intersecting_pair_family();

/// Bipartite incidence graph between B = {0..n-1}, n = 10k - 9, and all
/// k-subsets of B (ids n.. in lexicographic order).
struct PigeonholeFamily {
  std::size_t k = 0;
  std::size_t base_size = 0;
  Graph graph;
  std::vector<std::vector<Vertex>> sets;  // members of each set vertex
  std::vector<Role> roles;
};

/// Throws FamilyError if k == 0 or the graph would exceed `max_vertices`.
PigeonholeFamily build_pigeonhole_family(std::size_t k, std::size_t max_vertices = 2'000'000);

/// Counting argument plus a verifier-checked witness that a set vertex whose
/// members share a pair cannot be satisfied; exact search for k = 1.
bool check_pigeonhole(const PigeonholeFamily& fam);

/// One line `id role` per vertex.
void write_roles(std::ostream& out, const std::vector<Role>& roles);

}  // namespace sensorcfg
