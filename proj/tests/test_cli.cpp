#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "cyclecover/graphs.hpp"
#include "cyclecover/io.hpp"
#include "cyclecover/symfunc.hpp"

using namespace cyclecover;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary with stderr discarded; tests only freeze stdout.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CYCLECOVER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string fixture(const std::string& name, const std::string& content) {
  namespace fs = std::filesystem;
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "cyclecover_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  fs::path path = dir / name;
  std::ofstream out(path);
  out << content;
  REQUIRE(out.good());
  return path.string();
}

}  // namespace

TEST_CASE("csf prints chromatic symmetric functions as text") {
  std::string k3 = fixture("k3.txt", "graph 3\n0 1\n0 2\n1 2\n");
  RunResult r = run_cli("csf --input " + k3);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "6 e_{3}\n");

  std::string p3 = fixture("p3.txt", "graph 3\n0 1\n1 2\n");
  r = run_cli("csf --input " + p3);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "e_{2,1} + 3 e_{3}\n");

  std::string claw = fixture("claw.txt", "graph 4\n0 1\n0 2\n0 3\n");
  r = run_cli("csf --input " + claw);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "e_{2,1,1} - 2 e_{2,2} + 5 e_{3,1} + 4 e_{4}\n");
  r = run_cli("csf --input " + claw + " --basis m");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "24 m_{1,1,1,1} + 6 m_{2,1,1} + m_{3,1}\n");
}

TEST_CASE("csf --incomparability colors the incomparability graph of a poset") {
  std::string chain = fixture("chain3.txt", "poset 3\n0 1\n1 2\n");
  RunResult r = run_cli("csf --input " + chain + " --incomparability --basis p");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "p_{1,1,1}\n");  // chain is incomparable to nothing
  r = run_cli("csf --input " + chain + " --incomparability");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "e_{1,1,1}\n");
}

TEST_CASE("csf --format json matches the library expansion") {
  std::string claw = fixture("claw.txt", "graph 4\n0 1\n0 2\n0 3\n");
  RunResult r = run_cli("csf --input " + claw + " --basis p --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("basis") == "p");
  Graph g(4, {{0, 1}, {0, 2}, {0, 3}});
  SymFunc expected = chromatic_symfunc(g).in_basis(Basis::kPower);
  CHECK(symfunc_from_json(r.out) == expected);
}

TEST_CASE("csf error paths") {
  CHECK(run_cli("csf --input /nonexistent/file.txt").exit_code == 2);
  // A poset file is not a graph file unless --incomparability asks for one.
  std::string chain = fixture("chain3.txt", "poset 3\n0 1\n1 2\n");
  CHECK(run_cli("csf --input " + chain).exit_code == 2);
  std::string k3 = fixture("k3.txt", "graph 3\n0 1\n0 2\n1 2\n");
  CHECK(run_cli("csf --input " + k3 + " --basis q").exit_code == 2);
  std::string junk = fixture("junk.txt", "graph 3\n0 1\n0 2\n1 2\nvertex 0\n");
  CHECK(run_cli("csf --input " + junk).exit_code == 2);  // trailing object
}

TEST_CASE("verify emits a JSON report and meaningful exit codes") {
  RunResult r = run_cli("verify peqc2 --nmax 2");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("theorem") == "peqc2");
  CHECK(j.at("nmax") == 2);
  CHECK(j.at("instances") == 4);  // the acyclic digraphs on 1 and 2 vertices
  CHECK(j.at("sampled") == false);
  CHECK(j.at("pass") == true);
  CHECK(j.at("failures").empty());
  CHECK_FALSE(j.contains("seed"));  // only reported for sampled runs

  CHECK(run_cli("verify no-such-theorem --nmax 3").exit_code == 2);
  CHECK(run_cli("verify peqc2 --nmax 0").exit_code == 3);
  CHECK(run_cli("verify peqc2 --nmax 99").exit_code == 3);  // above hard cap
}

TEST_CASE("verify sampled runs are reproducible for a fixed seed") {
  RunResult first = run_cli("verify shatter --nmax 5 --seed 9");
  RunResult second = run_cli("verify shatter --nmax 5 --seed 9");
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  CHECK(first.out == second.out);
  json j = json::parse(first.out);
  CHECK(j.at("sampled") == true);
  CHECK(j.at("seed") == 9);
  CHECK(j.at("pass") == true);
}

TEST_CASE("bijection foata maps paths to cycle covers and back") {
  std::string fwd = fixture("foata_fwd.txt", "digraph 2\n0 1\npath 2\n1 0\n");
  RunResult r = run_cli("bijection foata --input " + fwd);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "cyclecover 2\n0\n1\n");

  std::string back = fixture("foata_back.txt", "digraph 2\n0 1\ncyclecover 2\n0\n1\n");
  r = run_cli("bijection foata-inverse --input " + back);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "path 2\n1 0\n");
}

TEST_CASE("bijection tree pairing round trips through the CLI") {
  // complement of 0->1 on two vertices keeps 0->0, 1->0, 1->1
  std::string fwd = fixture("tree_fwd.txt", "digraph 2\n0 1\nvertex 1\ndigraph 2\n1 0\n");
  RunResult r = run_cli("bijection tree-to-functional --input " + fwd);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "digraph 2\n0 0\n1 1\n");

  std::string back = fixture("tree_back.txt", "digraph 2\n0 1\ndigraph 2\n0 0\n1 1\n");
  r = run_cli("bijection functional-to-tree --input " + back);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "vertex 1\ndigraph 2\n1 0\n");
}

TEST_CASE("bijection shatter-s peels greatest sinks, with optional trace") {
  std::string fig = fixture("shatter.txt",
                            "poset 5\n0 1\n1 2\n3 4\n3 1\n"
                            "orientation 4\n3 0\n0 4\n4 1\n2 4\n");
  RunResult r = run_cli("bijection shatter-s --input " + fig);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "path 5\n1 4 2 0 3\n");

  r = run_cli("bijection shatter-s --trace --input " + fig);
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "# {\"sinks\":[1]}\n"
        "# {\"sinks\":[4]}\n"
        "# {\"sinks\":[0,2]}\n"
        "# {\"sinks\":[0]}\n"
        "# {\"sinks\":[3]}\n"
        "path 5\n1 4 2 0 3\n");

  std::string back = fixture("shatter_back.txt", "poset 5\n0 1\n1 2\n3 4\n3 1\npath 5\n1 4 2 0 3\n");
  r = run_cli("bijection shatter-r --input " + back);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "orientation 4\n3 0\n0 4\n4 1\n2 4\n");
}

TEST_CASE("bijection second-sink-t and -u invert each other, tracing flips") {
  std::string circular = fixture("circular.txt",
                                 "poset 5\n0 1\n1 2\n3 4\n3 1\n"
                                 "orientation 4\n0 3\n4 0\n4 1\n2 4\n");
  RunResult r = run_cli("bijection second-sink-t --trace --input " + circular);
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "# {\"flip\":3}\n"
        "# {\"flip\":0}\n"
        "# {\"flip\":3}\n"
        "orientation 4\n3 0\n0 4\n4 1\n2 4\n");

  std::string unique = fixture("unique.txt",
                               "poset 5\n0 1\n1 2\n3 4\n3 1\n"
                               "orientation 4\n3 0\n0 4\n4 1\n2 4\n");
  r = run_cli("bijection second-sink-u --input " + unique);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "orientation 4\n0 3\n4 0\n4 1\n2 4\n");
}

TEST_CASE("bijection sink-sequence and link-sequence round trip") {
  std::string fwd = fixture("sinkseq.txt", "graph 3\n0 1\n1 2\norientation 2\n0 1\n2 1\n");
  RunResult r = run_cli("bijection sink-sequence --input " + fwd);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "osp 2\n1\n0 2\n");

  std::string back = fixture("linkseq.txt", "graph 3\n0 1\n1 2\nosp 2\n1\n0 2\n");
  r = run_cli("bijection link-sequence --input " + back);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "orientation 2\n0 1\n2 1\n");
}

TEST_CASE("bijection error paths") {
  std::string cyclic = fixture("cyclic.txt", "digraph 2\n0 1\n1 0\npath 2\n1 0\n");
  CHECK(run_cli("bijection foata --input " + cyclic).exit_code == 3);
  std::string fwd = fixture("foata_fwd.txt", "digraph 2\n0 1\npath 2\n1 0\n");
  CHECK(run_cli("bijection no-such-map --input " + fwd).exit_code == 2);
  CHECK(run_cli("bijection foata --input /nonexistent/file.txt").exit_code == 2);
  std::string extra = fixture("extra.txt", "digraph 2\n0 1\npath 2\n1 0\nvertex 0\n");
  CHECK(run_cli("bijection foata --input " + extra).exit_code == 2);
}

TEST_CASE("scan-posets reports e-positivity findings") {
  RunResult r = run_cli("scan-posets --n 3");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("scan") == "posets");
  CHECK(j.at("n") == 3);
  CHECK(j.at("instances") == 19);  // labeled posets on three elements
  CHECK(j.at("pass") == true);
  CHECK(j.at("failures").empty());
  CHECK(j.at("findings").empty());
}

TEST_CASE("scan-posets --n 4 finds the chain-plus-isolated-point posets") {
  namespace fs = std::filesystem;
  std::string report = (fs::temp_directory_path() / "cyclecover_cli_tests" / "scan4.json").string();
  RunResult r = run_cli("scan-posets --n 4 --report " + report);
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("findings").size() == 24);
  for (const json& finding : j.at("findings")) {
    CHECK(finding.at("three_plus_one_free") == false);
  }
  CHECK(j.at("findings").at(0).at("poset") == "poset 4; 0 1; 1 2");

  std::ifstream in(report);
  REQUIRE(in.good());
  std::ostringstream copied;
  copied << in.rdbuf();
  CHECK(copied.str() == r.out);
}

TEST_CASE("top-level usage errors") {
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
  CHECK(run_cli("frobnicate").exit_code == 2);
  RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("csf") != std::string::npos);
  CHECK(run_cli("scan-posets --n 0").exit_code == 3);
}
