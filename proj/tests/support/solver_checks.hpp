#pragma once

#include <chrono>
#include <random>
#include <string>

#include "sensorcfg/oracle.hpp"
#include "sensorcfg/solver.hpp"
#include "support/lemma_checks.hpp"
#include "support/oracles.hpp"

namespace testing_checks {

struct RdiskTally : Tally {
  std::size_t components_solved = 0;
  std::size_t exceptional = 0;
  std::size_t oracle_checked = 0;
  double seconds = 0;
};

/// Random R-disk graphs with n <= nmax: K_{1,6}-free, no K_{2,3} component,
/// and every component of the 2-core solves and verifies (or is one of the
/// exceptional graphs, confirmed by the oracle). Components with at
/// most nine vertices are also compared against the exact search.
inline RdiskTally check_rdisk_instances(std::size_t count, std::size_t nmax, std::uint64_t seed) {
  RdiskTally t;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> nd(5, nmax);
  std::uniform_real_distribution<double> density(0.5, 6.0);
  const Graph k23 = complete_bipartite(2, 3);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = nd(rng);
    // Expected degree ~ pi R^2 n / box^2, so pick the box from a target density.
    const double box = std::sqrt(3.14159 * static_cast<double>(n) / density(rng));
    const Graph g = generate_rdisk(orc::random_points(rng, n, box, 1.0));
    ++t.cases;
    if (!is_k16_free(g)) {
      t.fail("instance " + std::to_string(i) + " has an induced K1,6");
      continue;
    }
    for (const auto& comp : components(g)) {
      const Graph h = induced(g, comp).graph;
      if (h.size() == 5 && orc::isomorphic(h, k23)) t.fail("instance " + std::to_string(i) + " has a K2,3 component");
    }
    // Components of the 2-core include every min-degree-2 component as is.
    for (const Graph& h : orc::two_core_components(g)) {
      const SolveResult r = solve(h);
      const bool small = h.size() <= 9;
      OracleResult exact;
      if (small) {
        exact = exact_solve(h);
        ++t.oracle_checked;
      }
      if (r.status == SolveStatus::Configured) {
        ++t.components_solved;
        if (!orc::is_configuration(h, *r.configuration)) t.fail("instance " + std::to_string(i) + ": bad configuration");
        if (small && exact.outcome != OracleOutcome::Configurable) t.fail("oracle disagrees");
      } else if (r.status == SolveStatus::Exceptional) {
        ++t.exceptional;
        if (!detect_exceptional(h) || orc::configurable(h)) t.fail("instance " + std::to_string(i) + ": false exception");
      } else {
        t.fail("instance " + std::to_string(i) + ": precondition failure " + r.components.front().reason);
      }
    }
  }
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

/// Connected min-degree-2 R-disk components the solver configures.
inline std::vector<std::pair<Graph, Configuration>> configured_samples(std::size_t count, std::uint64_t seed) {
  std::vector<std::pair<Graph, Configuration>> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> nd(8, 40);
  while (out.size() < count) {
    const std::size_t n = nd(rng);
    const Graph g = generate_rdisk(orc::random_points(rng, n, std::sqrt(static_cast<double>(n) / 1.2), 1.0));
    for (const auto& comp : components(g)) {
      const Graph h = induced(g, comp).graph;
      if (h.size() < 5 || min_degree(h) < 2 || out.size() >= count) continue;
      const SolveResult r = solve(h);
      if (r.configuration) out.emplace_back(h, *r.configuration);
    }
  }
  return out;
}

/// make_r_configuration for r = 2..5 on configured samples: independently
/// verified, with exactly floor(5r/2) labels.
inline Tally check_r_configurations(std::size_t samples, std::uint64_t seed) {
  Tally t;
  for (const auto& [g, f] : configured_samples(samples, seed)) {
    for (int r = 2; r <= 5; ++r) {
      ++t.cases;
      const RConfiguration rc = make_r_configuration(g, f, r);
      std::set<int> used;
      for (const auto& s : rc.sets) used.insert(s.begin(), s.end());
      if (!orc::r_configuration_ok(g, rc.sets, r) || used.size() != static_cast<std::size_t>(5 * r / 2)) {
        t.fail("r=" + std::to_string(r) + " on n=" + std::to_string(g.size()));
      }
    }
  }
  return t;
}

}  // namespace testing_checks
