#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sensorcfg/graph.hpp"
#include "sensorcfg/io.hpp"
#include "sensorcfg/labeling.hpp"

#ifndef SENSORCFG_FIXTURE_DIR
#error "SENSORCFG_FIXTURE_DIR must be defined"
#endif

namespace testing_fixtures {

struct Fixture {
  std::string name;
  sensorcfg::Graph graph;
  sensorcfg::Configuration config;
};

inline std::string fixture_path(const std::string& file) { return std::string(SENSORCFG_FIXTURE_DIR) + "/" + file; }

inline Fixture load(const std::string& name) {
  std::ifstream ge(fixture_path(name + ".edges"));
  std::ifstream ce(fixture_path(name + ".conf"));
  if (!ge || !ce) throw std::runtime_error("missing fixture " + name);
  Fixture fx{name, sensorcfg::read_edge_list(ge), {}};
  fx.config = sensorcfg::read_configuration(ce, fx.graph.size());
  return fx;
}

/// Every explicit configuration used as a golden reference.
inline const std::vector<std::string>& golden_names() {
  static const std::vector<std::string> names = {
      "c5_pattern",        "c6_pattern",       "k24",
      "c4_path4_opposite", "c7_path3_same_end", "c7_path4_u1_u6",
      "c7_path3_u1_u5",    "c4c4_path3_at_u2", "c4c4_path3_at_v",
      "c4c4_path1_v_u2",   "k23_plus_u1u2",    "c7_star21",
  };
  return names;
}

}  // namespace testing_fixtures
