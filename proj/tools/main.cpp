#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclecover/bijections.hpp"
#include "cyclecover/census.hpp"
#include "cyclecover/errors.hpp"
#include "cyclecover/io.hpp"
#include "cyclecover/symfunc.hpp"

namespace {

using namespace cyclecover;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  return in;
}

void finish_reading(ObjectReader& reader) {
  if (!reader.at_end()) throw ParseError("unexpected trailing object in input file");
}

void trace_line(bool enabled, const nlohmann::ordered_json& step) {
  if (enabled) std::cout << "# " << step.dump() << "\n";
}

int cmd_csf(const std::string& input, bool incomparability, const std::string& basis,
            const std::string& format) {
  std::ifstream in = open_input(input);
  ObjectReader reader(in);
  Graph g = incomparability ? incomparability_graph(reader.read_poset()) : reader.read_graph();
  finish_reading(reader);
  SymFunc x = chromatic_symfunc(g).in_basis(basis_from_name(basis));
  if (format == "json")
    std::cout << symfunc_to_json(x);
  else
    std::cout << symfunc_to_text(x) << "\n";
  return 0;
}

int cmd_verify(const std::string& theorem, int nmax, std::optional<std::uint64_t> seed) {
  CensusReport report = run_census(theorem, nmax, seed);
  std::cout << census_report_to_json(report);
  std::ostringstream line;
  line << report.theorem << " nmax=" << report.nmax << ": " << report.instances << " instances, "
       << (report.pass() ? "pass" : "FAIL (" + std::to_string(report.failures.size()) +
                                        " failures)")
       << " [" << report.wall_seconds << "s]\n";
  std::cerr << line.str();
  return report.pass() ? 0 : 1;
}

int cmd_bijection(const std::string& name, const std::string& input, bool trace) {
  std::ifstream in = open_input(input);
  ObjectReader reader(in);

  if (name == "foata") {
    Digraph d = reader.read_digraph();
    std::vector<int> path = reader.read_path();
    finish_reading(reader);
    std::vector<FoataQuadruple> quads;
    CycleCover cover = foata_path_to_cycles(d, path, &quads);
    for (const auto& q : quads)
      trace_line(trace, {{"s", q.s}, {"t", q.t}, {"rho", q.rho}, {"cycle", q.cycle}});
    std::cout << format_cycle_cover(cover);
  } else if (name == "foata-inverse") {
    Digraph d = reader.read_digraph();
    CycleCover cover = reader.read_cycle_cover();
    finish_reading(reader);
    std::cout << format_path(foata_cycles_to_path(d, cover));
  } else if (name == "tree-to-functional") {
    Digraph d = reader.read_digraph();
    int vertex = reader.read_vertex();
    Digraph tree = reader.read_digraph();
    finish_reading(reader);
    std::cout << format_digraph(tree_to_functional(d, vertex, tree));
  } else if (name == "functional-to-tree") {
    Digraph d = reader.read_digraph();
    Digraph functional = reader.read_digraph();
    finish_reading(reader);
    auto [vertex, tree] = functional_to_tree(d, functional);
    std::cout << format_vertex(vertex) << format_digraph(tree);
  } else if (name == "shatter-r") {
    Poset p = reader.read_poset();
    std::vector<int> path = reader.read_path();
    finish_reading(reader);
    std::cout << format_orientation(shatter_r(p, path));
  } else if (name == "shatter-s") {
    Poset p = reader.read_poset();
    Orientation a = reader.read_orientation(incomparability_graph(p));
    finish_reading(reader);
    std::vector<std::vector<int>> sinks;
    std::vector<int> path = shatter_s(p, a, &sinks);
    for (const auto& step : sinks) trace_line(trace, {{"sinks", step}});
    std::cout << format_path(path);
  } else if (name == "second-sink-t" || name == "second-sink-u") {
    Poset p = reader.read_poset();
    Orientation a = reader.read_orientation(incomparability_graph(p));
    finish_reading(reader);
    std::vector<int> flips;
    Orientation image = (name == "second-sink-t") ? second_sink_t(p, a, &flips)
                                                  : second_sink_u(p, a, &flips);
    for (int v : flips) trace_line(trace, {{"flip", v}});
    std::cout << format_orientation(image);
  } else if (name == "sink-sequence") {
    Graph g = reader.read_graph();
    Orientation a = reader.read_orientation(g);
    finish_reading(reader);
    std::cout << format_osp(sink_sequence_f(g, a));
  } else if (name == "link-sequence") {
    Graph g = reader.read_graph();
    OrderedSetPartition sigma = reader.read_osp();
    finish_reading(reader);
    std::cout << format_orientation(link_sequence_to_orientation(g, sigma));
  } else {
    throw ParseError("unknown bijection '" + name + "'");
  }
  return 0;
}

int cmd_scan_posets(int n, const std::string& report_path) {
  ScanReport report = scan_posets(n);
  std::string json = scan_report_to_json(report);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw ParseError("cannot open report file '" + report_path + "'");
    out << json;
  }
  std::cout << json;
  std::ostringstream line;
  line << "posets n=" << report.n << ": " << report.instances << " instances, "
       << (report.pass() ? "pass" : "FAIL (" + std::to_string(report.failures.size()) +
                                        " failures)")
       << ", " << report.findings.size() << " non-e-positive [" << report.wall_seconds << "s]\n";
  std::cerr << line.str();
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact path covers, cycle covers, and chromatic symmetric functions"};
  app.require_subcommand(1);

  std::string csf_input, csf_basis = "e", csf_format = "text";
  bool csf_incomparability = false;
  CLI::App* csf = app.add_subcommand(
      "csf", "chromatic symmetric function of a graph or of a poset's incomparability graph");
  csf->add_option("--input", csf_input, "object file holding a graph (or a poset)")->required();
  csf->add_flag("--incomparability", csf_incomparability,
                "read a poset and use its incomparability graph");
  csf->add_option("--basis", csf_basis, "output basis")
      ->check(CLI::IsMember({"p", "e", "h", "mt", "m"}));
  csf->add_option("--format", csf_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string verify_theorem;
  int verify_nmax = 0;
  std::uint64_t verify_seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "run one verification census");
  verify->add_option("theorem", verify_theorem, "theorem id (see README)")->required();
  verify->add_option("--nmax", verify_nmax, "largest vertex count to check")->required();
  CLI::Option* seed_option =
      verify->add_option("--seed", verify_seed, "seed for sampled levels (default 1)");

  std::string bijection_name, bijection_input;
  bool bijection_trace = false;
  CLI::App* bijection = app.add_subcommand("bijection", "apply one bijection to an object file");
  bijection->add_option("name", bijection_name,
                        "foata | foata-inverse | tree-to-functional | functional-to-tree | "
                        "shatter-r | shatter-s | second-sink-t | second-sink-u | "
                        "sink-sequence | link-sequence")
      ->required();
  bijection->add_option("--input", bijection_input, "object file with the bijection's inputs")
      ->required();
  bijection->add_flag("--trace", bijection_trace, "print intermediate steps as '# {json}' lines");

  int scan_n = 0;
  std::string scan_report_path;
  CLI::App* scan = app.add_subcommand(
      "scan-posets", "check e-coefficient routes and e-positivity over all labeled posets");
  scan->add_option("--n", scan_n, "number of poset elements")->required();
  scan->add_option("--report", scan_report_path, "also write the JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (csf->parsed()) return cmd_csf(csf_input, csf_incomparability, csf_basis, csf_format);
    if (verify->parsed()) {
      std::optional<std::uint64_t> seed;
      if (seed_option->count() > 0) seed = verify_seed;
      return cmd_verify(verify_theorem, verify_nmax, seed);
    }
    if (bijection->parsed()) return cmd_bijection(bijection_name, bijection_input, bijection_trace);
    if (scan->parsed()) return cmd_scan_posets(scan_n, scan_report_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
