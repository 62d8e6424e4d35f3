#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "sensorcfg/counterexamples.hpp"
#include "sensorcfg/io.hpp"
#include "sensorcfg/oracle.hpp"
#include "sensorcfg/solver.hpp"

namespace sensorcfg::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Input or output trouble that maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool verbose = false;
  bool allow_slow = false;
  std::uint64_t seed = 1;
  int r = 2;
  std::string family = "k19";
  std::size_t k = 1;
  double radius = 1.0;
  double box = 10.0;
  std::size_t count = 50;
  std::size_t nmax = 7;
  std::string points_file;
  std::string out_prefix;
  std::string graph_path;
  std::string config_path;
};

Graph load_graph(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return read_edge_list(in);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    return read_edge_list(file);
  } catch (const ParseError& e) {
    throw InputError(std::string(path.empty() ? "<stdin>" : path) + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(std::string(path.empty() ? "<stdin>" : path) + ": " + e.what());
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  return file;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json labels_json(const PartialConfiguration& f, const std::vector<Vertex>& vertices) {
  json out = json::object();
  for (Vertex v : vertices) {
    const LabelPair p = f.at(v);
    out[std::to_string(v)] = {p.first(), p.second()};
  }
  return out;
}

void write_trace(std::ostream& err, const ReductionTrace& trace) {
  for (const auto& step : trace) err << "# " << to_string(step) << '\n';
}

std::string_view report_status(SolveStatus s) {
  switch (s) {
    case SolveStatus::Configured: return "ok";
    case SolveStatus::Exceptional: return "exceptional";
    case SolveStatus::PreconditionFailed: return "precondition-failed";
  }
  return "?";
}

void print_components_text(std::ostream& out, const SolveResult& r) {
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const auto& c = r.components[i];
    if (c.status == SolveStatus::Exceptional) {
      out << "component " << i << ": exceptional " << to_string(*c.kind) << '\n';
    } else if (c.status == SolveStatus::PreconditionFailed) {
      out << "component " << i << ": " << c.reason << " witness";
      for (Vertex v : c.witness) out << ' ' << v;
      out << '\n';
    }
  }
}

// --- commands ---------------------------------------------------------------

int cmd_solve(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph_path, in);
  const auto start = Clock::now();
  const SolveResult r = solve(g);
  const double ms = elapsed_ms(start);
  if (o.verbose) write_trace(err, r.trace);
  if (r.configuration && !verify(g, *r.configuration).empty()) {
    err << "error: internal: configuration failed verification\n";
    return kDiscrepancy;
  }
  if (o.json) {
    json doc;
    doc["status"] = report_status(r.status);
    doc["components"] = json::array();
    for (const auto& c : r.components) {
      json jc;
      jc["vertices"] = c.vertices;
      if (c.kind) jc["kind"] = to_string(*c.kind);
      if (c.status == SolveStatus::Configured) jc["labels"] = labels_json(r.labels, c.vertices);
      if (c.status == SolveStatus::PreconditionFailed) {
        jc["reason"] = c.reason;
        jc["witness"] = c.witness;
      }
      doc["components"].push_back(std::move(jc));
    }
    doc["timing_ms"] = ms;
    out << doc.dump(2) << '\n';
  } else {
    out << "status: " << report_status(r.status) << '\n';
    print_components_text(out, r);
    if (r.configuration) write_configuration(out, *r.configuration);
  }
  return r.status == SolveStatus::PreconditionFailed ? kPrecondition : kOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o.graph_path, in);
  Configuration f;
  try {
    // Accepts `solve` output as is: its status line is blanked, keeping line numbers.
    std::ifstream file;
    if (o.config_path != "-") {
      file.open(o.config_path);
      if (!file) throw InputError("cannot open " + o.config_path);
    }
    std::istream& src = o.config_path == "-" ? in : file;
    std::ostringstream cleaned;
    for (std::string line; std::getline(src, line);) {
      cleaned << (line.rfind("status:", 0) == 0 ? "" : line) << '\n';
    }
    std::istringstream text(cleaned.str());
    f = read_configuration(text, g.size());
  } catch (const ParseError& e) {
    throw InputError(o.config_path + ": " + e.what());
  } catch (const LabelError& e) {
    throw InputError(o.config_path + ": " + e.what());
  }
  const auto bad = verify(g, f);
  if (o.json) {
    json doc;
    doc["status"] = bad.empty() ? "ok" : "invalid";
    doc["unsatisfied"] = bad;
    out << doc.dump(2) << '\n';
  } else {
    out << "status: " << (bad.empty() ? "ok" : "invalid") << '\n';
    for (Vertex v : bad) out << "unsatisfied: " << v << '\n';
  }
  return bad.empty() ? kOk : kDiscrepancy;
}

int cmd_oracle(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o.graph_path, in);
  const auto start = Clock::now();
  const OracleResult r = exact_solve(g);
  const double ms = elapsed_ms(start);
  const char* status = r.outcome == OracleOutcome::Configurable      ? "ok"
                       : r.outcome == OracleOutcome::NotConfigurable ? "not-configurable"
                                                                     : "budget-exceeded";
  if (o.json) {
    json doc;
    doc["status"] = status;
    doc["nodes"] = r.nodes;
    if (r.configuration) {
      std::vector<Vertex> all(g.size());
      for (std::size_t v = 0; v < g.size(); ++v) all[v] = static_cast<Vertex>(v);
      doc["labels"] = labels_json(*r.configuration, all);
    }
    doc["timing_ms"] = ms;
    out << doc.dump(2) << '\n';
  } else {
    out << "status: " << status << '\n' << "nodes: " << r.nodes << '\n';
    if (r.configuration) write_configuration(out, *r.configuration);
  }
  return r.outcome == OracleOutcome::BudgetExceeded ? kBudgetExceeded : kOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o.graph_path, in);
  const auto star = find_induced_star(g, 6);
  json doc;
  doc["status"] = "ok";
  doc["vertices"] = g.size();
  doc["edges"] = g.edge_count();
  doc["min_degree"] = g.empty() ? 0 : min_degree(g);
  doc["max_degree"] = g.empty() ? 0 : max_degree(g);
  doc["connected"] = is_connected(g);
  doc["k16_free"] = !star.has_value();
  if (star) doc["k16_witness"] = *star;
  doc["components"] = json::array();
  for (auto comp : components(g)) {
    std::sort(comp.begin(), comp.end());
    json jc;
    jc["vertices"] = comp;
    if (auto kind = detect_exceptional(induced(g, comp).graph)) jc["kind"] = to_string(*kind);
    doc["components"].push_back(std::move(jc));
  }
  if (o.json) {
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "status: ok\n"
      << "vertices: " << g.size() << '\n'
      << "edges: " << g.edge_count() << '\n'
      << "min-degree: " << doc["min_degree"].get<std::size_t>() << '\n'
      << "max-degree: " << doc["max_degree"].get<std::size_t>() << '\n'
      << "connected: " << (is_connected(g) ? "yes" : "no") << '\n'
      << "k16-free: " << (star ? "no" : "yes") << '\n';
  if (star) {
    out << "k16-witness:";
    for (Vertex v : *star) out << ' ' << v;
    out << '\n';
  }
  for (std::size_t i = 0; i < doc["components"].size(); ++i) {
    const auto& jc = doc["components"][i];
    if (jc.contains("kind")) out << "component " << i << ": exceptional " << jc["kind"].get<std::string>() << '\n';
  }
  return kOk;
}

int cmd_gen_rdisk(const Options& o, std::ostream& out) {
  PointSet ps;
  if (!o.points_file.empty()) {
    std::ifstream file(o.points_file);
    if (!file) throw InputError("cannot open " + o.points_file);
    try {
      ps = read_point_set(file);
    } catch (const ParseError& e) {
      throw InputError(o.points_file + ": " + e.what());
    }
  } else {
    if (o.count < 1) throw InputError("--count must be at least 1");
    if (!(o.box > 0)) throw InputError("--box must be positive");
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> coord(0.0, o.box);
    for (std::size_t i = 0; i < o.count; ++i) {
      const double x = coord(rng);
      const double y = coord(rng);
      ps.points.push_back({x, y});
    }
    ps.radius = o.radius;
  }
  if (!(ps.radius > 0)) throw InputError("--radius must be positive");
  const Graph g = generate_rdisk(ps);
  if (o.out_prefix.empty()) {
    write_edge_list(out, g);
    return kOk;
  }
  auto pf = open_out(o.out_prefix + ".points");
  write_point_set(pf, ps);
  auto ef = open_out(o.out_prefix + ".edges");
  write_edge_list(ef, g);
  out << "status: ok\n"
      << "points: " << o.out_prefix << ".points\n"
      << "edges: " << o.out_prefix << ".edges\n";
  return kOk;
}

int cmd_gen_counterexample(const Options& o, std::ostream& out) {
  Graph g;
  std::vector<Role> roles;
  bool certified = false;
  if (o.family == "k19") {
    const auto fam = build_k19_family(o.k);
    certified = check_k19_nonconfigurable(fam);
    g = fam.graph;
    roles = fam.roles;
  } else if (o.family == "pigeonhole") {
    PigeonholeFamily fam;
    try {
      fam = build_pigeonhole_family(o.k);
    } catch (const FamilyError& e) {
      throw InputError(e.what());
    }
    certified = check_pigeonhole(fam);
    g = fam.graph;
    roles = fam.roles;
  } else {
    throw InputError("unknown family " + o.family);
  }
  if (o.out_prefix.empty()) {
    write_edge_list(out, g);
  } else {
    auto ef = open_out(o.out_prefix + ".edges");
    write_edge_list(ef, g);
    auto rf = open_out(o.out_prefix + ".roles");
    write_roles(rf, roles);
    out << "status: " << (certified ? "not-configurable" : "unverified") << '\n'
        << "vertices: " << g.size() << '\n'
        << "edges: " << o.out_prefix << ".edges\n"
        << "roles: " << o.out_prefix << ".roles\n";
  }
  return certified ? kOk : kDiscrepancy;
}

int cmd_dr(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph_path, in);
  if (o.r < 1) throw InputError("--r must be at least 1");
  const SolveResult r = solve(g);
  if (!r.configuration) {
    out << "status: " << report_status(r.status) << '\n';
    print_components_text(out, r);
    return r.status == SolveStatus::PreconditionFailed ? kPrecondition : kOk;
  }
  const RConfiguration rc = make_r_configuration(g, *r.configuration, o.r);
  if (!verify_r_configuration(g, rc)) {
    err << "error: internal: r-configuration failed verification\n";
    return kDiscrepancy;
  }
  if (o.json) {
    json doc;
    doc["status"] = "ok";
    doc["r"] = o.r;
    doc["labels"] = r_size(rc);
    json sets = json::object();
    for (std::size_t v = 0; v < rc.sets.size(); ++v) sets[std::to_string(v)] = rc.sets[v];
    doc["sets"] = std::move(sets);
    out << doc.dump(2) << '\n';
  } else {
    out << "status: ok\n" << "r: " << o.r << '\n' << "labels: " << r_size(rc) << '\n';
    for (std::size_t v = 0; v < rc.sets.size(); ++v) {
      out << v << ':';
      for (int l : rc.sets[v]) out << ' ' << l;
      out << '\n';
    }
  }
  return kOk;
}

struct Row {
  std::size_t n = 0, tested = 0, configurable = 0, exceptional = 0, discrepancies = 0;
  std::set<std::string> kinds;
};

int cmd_enumerate_test(const Options& o, std::ostream& out) {
  if (o.nmax > 8) throw InputError("--nmax is at most 8");
  if (o.nmax == 8 && !o.allow_slow) throw InputError("--nmax 8 needs --allow-slow");
  const auto start = Clock::now();
  std::vector<Row> rows;
  Row total;
  for (std::size_t n = 1; n <= o.nmax; ++n) {
    Row row;
    row.n = n;
    for_each_connected_graph(n, [&](const Graph& g) {
      if (min_degree(g) < 2 || !is_k16_free(g)) return;
      ++row.tested;
      const SolveResult r = solve(g);
      const OracleResult x = exact_solve(g);
      const bool solved = r.status == SolveStatus::Configured;
      if (solved) ++row.configurable;
      if (r.status == SolveStatus::Exceptional) {
        ++row.exceptional;
        row.kinds.insert(std::string(to_string(*r.components.front().kind)));
      }
      if (solved != (x.outcome == OracleOutcome::Configurable)) ++row.discrepancies;
    });
    total.tested += row.tested;
    total.configurable += row.configurable;
    total.exceptional += row.exceptional;
    total.discrepancies += row.discrepancies;
    total.kinds.insert(row.kinds.begin(), row.kinds.end());
    rows.push_back(std::move(row));
  }
  const char* status = total.discrepancies == 0 ? "ok" : "discrepancy";
  if (o.json) {
    json doc;
    doc["status"] = status;
    doc["rows"] = json::array();
    auto row_json = [](const Row& r) {
      return json{{"tested", r.tested},
                  {"configurable", r.configurable},
                  {"exceptional", r.exceptional},
                  {"discrepancies", r.discrepancies},
                  {"kinds", r.kinds}};
    };
    for (const Row& r : rows) {
      json jr = row_json(r);
      jr["n"] = r.n;
      doc["rows"].push_back(std::move(jr));
    }
    doc["total"] = row_json(total);
    doc["timing_ms"] = elapsed_ms(start);
    out << doc.dump(2) << '\n';
  } else {
    out << "n tested configurable exceptional discrepancies kinds\n";
    auto line = [&](const std::string& label, const Row& r) {
      out << label << ' ' << r.tested << ' ' << r.configurable << ' ' << r.exceptional << ' ' << r.discrepancies
          << ' ';
      bool first = true;
      for (const auto& k : r.kinds) {
        out << (first ? "" : ",") << k;
        first = false;
      }
      if (first) out << '-';
      out << '\n';
    };
    for (const Row& r : rows) line(std::to_string(r.n), r);
    line("total", total);
    out << "status: " << status << '\n';
  }
  return total.discrepancies == 0 ? kOk : kDiscrepancy;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructs and checks (5,2)-configurations of graphs", "sensorcfg"};
  app.require_subcommand(1);
  Options o;
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph_path, "edge-list file ('-' or omitted: stdin)");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };

  auto* solve_cmd = app.add_subcommand("solve", "construct a configuration");
  add_graph(solve_cmd);
  add_json(solve_cmd);
  solve_cmd->add_flag("--verbose", o.verbose, "print the reduction trace to stderr");

  auto* verify_cmd = app.add_subcommand("verify", "check a configuration against a graph");
  verify_cmd->add_option("graph", o.graph_path, "edge-list file")->required();
  verify_cmd->add_option("config", o.config_path, "configuration file ('-': stdin)")->required();
  add_json(verify_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "decide configurability by exact search");
  add_graph(oracle_cmd);
  add_json(oracle_cmd);

  auto* check_cmd = app.add_subcommand("check", "structural report: degrees, K1,6-freeness, exceptional parts");
  add_graph(check_cmd);
  add_json(check_cmd);

  auto* rdisk_cmd = app.add_subcommand("gen-rdisk", "generate a random R-disk graph");
  rdisk_cmd->add_option("--count", o.count, "number of points");
  rdisk_cmd->add_option("--box", o.box, "side of the square the points are drawn from");
  rdisk_cmd->add_option("--radius", o.radius, "connection radius");
  rdisk_cmd->add_option("--seed", o.seed, "random seed");
  rdisk_cmd->add_option("--points-file", o.points_file, "use these points instead of random ones");
  rdisk_cmd->add_option("--out", o.out_prefix, "write PREFIX.points and PREFIX.edges");

  auto* cex_cmd = app.add_subcommand("gen-counterexample", "build and certify a non-configurable family member");
  cex_cmd->add_option("--family", o.family, "k19 or pigeonhole")->check(CLI::IsMember({"k19", "pigeonhole"}));
  cex_cmd->add_option("--k", o.k, "family parameter")->check(CLI::PositiveNumber);
  cex_cmd->add_option("--out", o.out_prefix, "write PREFIX.edges and PREFIX.roles");

  auto* dr_cmd = app.add_subcommand("dr", "r-configuration with floor(5r/2) labels");
  add_graph(dr_cmd);
  add_json(dr_cmd);
  dr_cmd->add_option("--r", o.r, "labels per vertex")->check(CLI::PositiveNumber);

  auto* enum_cmd = app.add_subcommand("enumerate-test", "compare solve and the oracle on all small graphs");
  enum_cmd->add_option("--nmax,nmax", o.nmax, "largest vertex count (default 7)");
  enum_cmd->add_flag("--allow-slow", o.allow_slow, "permit nmax = 8");
  add_json(enum_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(o, in, out, err);
    if (*verify_cmd) return cmd_verify(o, in, out);
    if (*oracle_cmd) return cmd_oracle(o, in, out);
    if (*check_cmd) return cmd_check(o, in, out);
    if (*rdisk_cmd) return cmd_gen_rdisk(o, out);
    if (*cex_cmd) return cmd_gen_counterexample(o, out);
    if (*dr_cmd) return cmd_dr(o, in, out, err);
    if (*enum_cmd) return cmd_enumerate_test(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  }
  return kInputError;
}

}  // namespace sensorcfg::cli
