#include "sensorcfg/io.hpp"

#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace sensorcfg {

namespace {

// Reads the next non-blank line; returns false at end of input.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

template <typename... Ts>
void parse_fields(const std::string& line, std::size_t lineno, const char* expected, Ts&... fields) {
  std::istringstream ss(line);
  ((ss >> fields), ...);
  std::string rest;
  if (!ss || (ss >> rest)) throw ParseError(lineno, std::string("expected ") + expected + ", got '" + line + "'");
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw ParseError(0, "missing header 'n m'");
  long long n = 0, m = 0;
  parse_fields(line, lineno, "'n m'", n, m);
  if (n < 0 || m < 0) throw ParseError(lineno, "negative counts in header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line, lineno)) throw ParseError(0, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    long long u = 0, v = 0;
    parse_fields(line, lineno, "'u v'", u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.size() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

PointSet read_point_set(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw ParseError(0, "missing header 'k R'");
  long long k = 0;
  PointSet ps;
  parse_fields(line, lineno, "'k R'", k, ps.radius);
  if (k < 0) throw ParseError(lineno, "negative point count");
  if (!(ps.radius > 0.0)) throw ParseError(lineno, "radius must be positive");
  for (long long i = 0; i < k; ++i) {
    if (!next_line(in, line, lineno)) throw ParseError(0, "expected " + std::to_string(k) + " points");
    Point p;
    parse_fields(line, lineno, "'x y'", p.x, p.y);
    ps.points.push_back(p);
  }
  return ps;
}

void write_point_set(std::ostream& out, const PointSet& ps) {
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  out << ps.points.size() << ' ' << ps.radius << '\n';
  for (const Point& p : ps.points) out << p.x << ' ' << p.y << '\n';
  out.precision(old_precision);
}

Configuration read_configuration(std::istream& in, std::size_t n) {
  PartialConfiguration f(n);
  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line, lineno)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected 'v: a b'");
    std::string head = line.substr(0, colon);
    std::string tail = line.substr(colon + 1);
    long long v = 0;
    int a = 0, b = 0;
    parse_fields(head, lineno, "vertex id", v);
    parse_fields(tail, lineno, "two labels", a, b);
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError(lineno, "vertex id out of range");
    if (a < 1 || a > kLabelCount || b < 1 || b > kLabelCount || a == b) {
      throw ParseError(lineno, "labels must be two distinct values in 1..5");
    }
    if (f.is_assigned(static_cast<Vertex>(v))) throw ParseError(lineno, "vertex listed twice");
    f.assign(static_cast<Vertex>(v), LabelPair{a, b});
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!f.is_assigned(static_cast<Vertex>(v))) throw ParseError(0, "no labels for vertex " + std::to_string(v));
  }
  return Configuration(f);
}

void write_configuration(std::ostream& out, const Configuration& f) {
  for (std::size_t v = 0; v < f.size(); ++v) {
    const LabelPair p = f[static_cast<Vertex>(v)];
    out << v << ": " << p.first() << ' ' << p.second() << '\n';
  }
}

}  // namespace sensorcfg
