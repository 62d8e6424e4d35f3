#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sensorcfg/graph.hpp"
#include "sensorcfg/labeling.hpp"

namespace sensorcfg {

/// Malformed text input. `line()` is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge list: first line "n m", then m lines "u v" (0-based ids).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Point set: first line "k R", then k lines "x y".
PointSet read_point_set(std::istream& in);
void write_point_set(std::ostream& out, const PointSet& ps);

// Configuration: one line "v: a b" per vertex with a < b. Lines may come in
// any order but must cover 0..n-1 exactly once.
Configuration read_configuration(std::istream& in, std::size_t n);
void write_configuration(std::ostream& out, const Configuration& f);

}  // namespace sensorcfg
