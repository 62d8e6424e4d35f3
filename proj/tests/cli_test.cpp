#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "sensorcfg/io.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace sensorcfg;
namespace orc = testing_oracles;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string edges_of(const Graph& g) {
  std::ostringstream s;
  write_edge_list(s, g);
  return s.str();
}

fs::path scratch_dir() {
  const fs::path p = fs::temp_directory_path() / ("sensorcfg_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, SolveC5) {
  const Invocation r = run({"solve"}, edges_of(cycle_graph(5)));
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out.rfind("status: ok\n", 0), 0u);
  std::istringstream body(r.out.substr(std::string("status: ok\n").size()));
  const Configuration f = read_configuration(body, 5);
  EXPECT_TRUE(orc::is_configuration(cycle_graph(5), f));
}

TEST(Cli, SolveC4Exceptional) {
  const Invocation text = run({"solve"}, edges_of(cycle_graph(4)));
  EXPECT_EQ(text.code, cli::kOk);
  EXPECT_NE(text.out.find("status: exceptional"), std::string::npos);
  EXPECT_NE(text.out.find("C4"), std::string::npos);

  const Invocation js = run({"solve", "--json"}, edges_of(cycle_graph(4)));
  const auto doc = nlohmann::json::parse(js.out);
  EXPECT_EQ(doc["status"], "exceptional");
  EXPECT_EQ(doc["components"][0]["kind"], "C4");
  EXPECT_TRUE(doc.contains("timing_ms"));
}

TEST(Cli, SolveJsonLabels) {
  const Invocation r = run({"solve", "--json"}, edges_of(petersen_graph()));
  ASSERT_EQ(r.code, cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["status"], "ok");
  const auto& labels = doc["components"][0]["labels"];
  std::vector<LabelPair> pairs;
  for (int v = 0; v < 10; ++v) {
    const auto& p = labels[std::to_string(v)];
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  EXPECT_TRUE(orc::is_configuration(petersen_graph(), Configuration(pairs)));
}

TEST(Cli, PreconditionAndInputErrors) {
  EXPECT_EQ(run({"solve"}, edges_of(path_graph(3))).code, cli::kPrecondition);
  const Invocation bad = run({"solve"}, "3 2\n0 1\n1 q\n");
  EXPECT_EQ(bad.code, cli::kInputError);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run({"solve", "/nonexistent/graph.edges"}).code, cli::kInputError);
  EXPECT_NE(run({"no-such-command"}).code, cli::kOk);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, SolveThenVerifyRoundTrip) {
  for (const auto& name : testing_fixtures::golden_names()) {
    const std::string graph = testing_fixtures::fixture_path(name + ".edges");
    const Invocation s = run({"solve", graph});
    if (s.out.rfind("status: ok", 0) != 0) continue;
    const Invocation v = run({"verify", graph, "-"}, s.out);
    EXPECT_EQ(v.code, cli::kOk) << name;
    EXPECT_EQ(v.out.rfind("status: ok", 0), 0u);
  }
}

TEST(Cli, VerifyGoldenAndInvalid) {
  for (const auto& name : testing_fixtures::golden_names()) {
    const Invocation v = run({"verify", testing_fixtures::fixture_path(name + ".edges"),
                       testing_fixtures::fixture_path(name + ".conf")});
    EXPECT_EQ(v.code, cli::kOk) << name;
  }
  const fs::path dir = scratch_dir();
  std::ofstream(dir / "c5.edges") << edges_of(cycle_graph(5));
  const Invocation bad = run({"verify", (dir / "c5.edges").string(), "-"}, "0: 1 2\n1: 1 2\n2: 1 2\n3: 1 2\n4: 1 2\n");
  EXPECT_EQ(bad.code, cli::kDiscrepancy);
  EXPECT_NE(bad.out.find("status: invalid"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, Oracle) {
  EXPECT_NE(run({"oracle"}, edges_of(cycle_graph(7))).out.find("not-configurable"), std::string::npos);
  EXPECT_NE(run({"oracle"}, edges_of(cycle_graph(5))).out.find("status: ok"), std::string::npos);
}

TEST(Cli, Check) {
  const Invocation r = run({"check", "--json"}, edges_of(complete_bipartite(1, 6)));
  ASSERT_EQ(r.code, cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["max_degree"], 6);
  const Invocation t = run({"check"}, edges_of(cycle_graph(7)));
  EXPECT_NE(t.out.find("k16-free: yes"), std::string::npos);
  EXPECT_NE(t.out.find("exceptional C7"), std::string::npos);
}

TEST(Cli, DrOnC5) {
  const Invocation r = run({"dr", "--r", "3"}, edges_of(cycle_graph(5)));
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("labels: 7"), std::string::npos);
  EXPECT_NE(run({"dr", "--r", "4"}, edges_of(cycle_graph(5))).out.find("labels: 10"), std::string::npos);
}

TEST(Cli, GenRdisk) {
  const fs::path dir = scratch_dir();
  std::ofstream(dir / "line.points") << "3 1.1\n0 0\n1 0\n2 0\n";
  const Invocation p = run({"gen-rdisk", "--points-file", (dir / "line.points").string(), "--out", (dir / "line").string()});
  ASSERT_EQ(p.code, cli::kOk) << p.err;
  std::ifstream le(dir / "line.edges");
  EXPECT_EQ(read_edge_list(le), path_graph(3));

  const std::vector<std::string> args = {"gen-rdisk", "--count", "80", "--box", "6", "--radius", "1", "--seed", "5"};
  auto a = args, b = args;
  a.insert(a.end(), {"--out", (dir / "a").string()});
  b.insert(b.end(), {"--out", (dir / "b").string()});
  ASSERT_EQ(run(a).code, cli::kOk);
  ASSERT_EQ(run(b).code, cli::kOk);
  EXPECT_EQ(slurp(dir / "a.edges"), slurp(dir / "b.edges"));
  EXPECT_EQ(slurp(dir / "a.points"), slurp(dir / "b.points"));
  const Invocation c = run({"check", (dir / "a.edges").string()});
  EXPECT_NE(c.out.find("k16-free: yes"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, GenCounterexample) {
  const fs::path dir = scratch_dir();
  const Invocation k19 = run({"gen-counterexample", "--family", "k19", "--k", "1", "--out", (dir / "k19").string()});
  ASSERT_EQ(k19.code, cli::kOk) << k19.err;
  EXPECT_NE(k19.out.find("not-configurable"), std::string::npos);
  std::ifstream e(dir / "k19.edges");
  EXPECT_EQ(read_edge_list(e).size(), 33u);
  const Invocation ph = run({"gen-counterexample", "--family", "pigeonhole", "--k", "2", "--out", (dir / "ph").string()});
  ASSERT_EQ(ph.code, cli::kOk);
  EXPECT_NE(slurp(dir / "ph.roles").find("65 set"), std::string::npos);
  EXPECT_NE(run({"gen-counterexample", "--family", "other", "--k", "1"}).code, cli::kOk);
  fs::remove_all(dir);
}

TEST(Cli, EnumerateTest) {
  const Invocation four = run({"enumerate-test", "--nmax", "4"});
  ASSERT_EQ(four.code, cli::kOk);
  EXPECT_NE(four.out.find("\n4 3 2 1 0 C4\n"), std::string::npos) << four.out;
  const Invocation five = run({"enumerate-test", "--nmax", "5", "--json"});
  ASSERT_EQ(five.code, cli::kOk);
  const auto doc = nlohmann::json::parse(five.out);
  for (const auto& row : doc["rows"]) {
    if (row["n"] == 5) EXPECT_EQ(row["kinds"], nlohmann::json::array({"K23"}));
  }
  EXPECT_EQ(doc["total"]["discrepancies"], 0);
}
