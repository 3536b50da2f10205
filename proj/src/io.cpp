#include "cyclecover/io.hpp"

#include <cctype>
#include <istream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "cyclecover/errors.hpp"

namespace cyclecover {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string t;
  while (ss >> t) tokens.push_back(t);
  return tokens;
}

int parse_int(const std::string& s) {
  size_t used = 0;
  int value;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError("expected an integer, got '" + s + "'");
  return value;
}

bool numeric_lead(const std::vector<std::string>& tokens) {
  return !tokens.empty() && (std::isdigit(static_cast<unsigned char>(tokens[0][0])) ||
                             tokens[0][0] == '-');
}

}  // namespace

ObjectReader::ObjectReader(std::istream& in) : in_(in) {}

std::vector<std::string> ObjectReader::take_line() {
  if (pending_) {
    auto line = std::move(*pending_);
    pending_.reset();
    return line;
  }
  std::string raw;
  while (std::getline(in_, raw)) {
    auto tokens = tokenize(raw);
    if (!tokens.empty()) return tokens;
  }
  throw ParseError("unexpected end of input");
}

bool ObjectReader::at_end() {
  if (pending_) return false;
  std::string raw;
  while (std::getline(in_, raw)) {
    auto tokens = tokenize(raw);
    if (!tokens.empty()) {
      pending_ = std::move(tokens);
      return false;
    }
  }
  return true;
}

std::string ObjectReader::peek_kind() {
  if (at_end()) throw ParseError("unexpected end of input");
  return (*pending_)[0];
}

std::vector<std::pair<int, int>> ObjectReader::take_pair_lines() {
  std::vector<std::pair<int, int>> pairs;
  while (!at_end()) {
    if (!numeric_lead(*pending_)) break;
    auto line = take_line();
    if (line.size() != 2) throw ParseError("expected a line with two vertices");
    pairs.emplace_back(parse_int(line[0]), parse_int(line[1]));
  }
  return pairs;
}

std::vector<std::vector<int>> ObjectReader::take_blocks(int count, const char* kind) {
  if (count < 0) throw ParseError(std::string(kind) + " count must be nonnegative");
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < count; ++i) {
    auto line = take_line();
    if (!numeric_lead(line))
      throw ParseError(std::string(kind) + " body ended before all blocks were read");
    std::vector<int> block;
    for (const auto& t : line) block.push_back(parse_int(t));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

namespace {

int header_count(const std::vector<std::string>& line, const char* kind) {
  if (line.size() != 2 || line[0] != kind)
    throw ParseError(std::string("expected header '") + kind + " <count>'");
  return parse_int(line[1]);
}

}  // namespace

Digraph ObjectReader::read_digraph() {
  int n = header_count(take_line(), "digraph");
  try {
    return Digraph(n, take_pair_lines());
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad digraph: ") + e.what());
  }
}

Graph ObjectReader::read_graph() {
  int n = header_count(take_line(), "graph");
  try {
    return Graph(n, take_pair_lines());
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad graph: ") + e.what());
  }
}

Poset ObjectReader::read_poset() {
  int n = header_count(take_line(), "poset");
  try {
    return Poset::from_relations_closure(n, take_pair_lines());
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad poset: ") + e.what());
  }
}

std::vector<int> ObjectReader::read_path() {
  int k = header_count(take_line(), "path");
  std::vector<int> path;
  while (static_cast<int>(path.size()) < k) {
    auto line = take_line();
    if (!numeric_lead(line)) throw ParseError("path body ended early");
    for (const auto& t : line) path.push_back(parse_int(t));
  }
  if (static_cast<int>(path.size()) != k) throw ParseError("path has the wrong vertex count");
  return path;
}

PathCover ObjectReader::read_path_cover() {
  int m = header_count(take_line(), "pathcover");
  try {
    return PathCover(take_blocks(m, "pathcover"));
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad path cover: ") + e.what());
  }
}

CycleCover ObjectReader::read_cycle_cover() {
  int m = header_count(take_line(), "cyclecover");
  try {
    return CycleCover(take_blocks(m, "cyclecover"));
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad cycle cover: ") + e.what());
  }
}

Orientation ObjectReader::read_orientation(const Graph& host) {
  int m = header_count(take_line(), "orientation");
  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i < m; ++i) {
    auto line = take_line();
    if (line.size() != 2 || !numeric_lead(line))
      throw ParseError("expected an orientation line with two vertices");
    arrows.emplace_back(parse_int(line[0]), parse_int(line[1]));
  }
  return Orientation(host, arrows);  // mismatches are domain errors
}

OrderedSetPartition ObjectReader::read_osp() {
  int r = header_count(take_line(), "osp");
  try {
    return OrderedSetPartition(take_blocks(r, "osp"));
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad ordered set partition: ") + e.what());
  }
}

int ObjectReader::read_vertex() {
  auto line = take_line();
  if (line.size() != 2 || line[0] != "vertex") throw ParseError("expected header 'vertex <v>'");
  return parse_int(line[1]);
}

namespace {

std::string join_ints(const std::vector<int>& vs) {
  std::string s;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s;
}

}  // namespace

std::string format_digraph(const Digraph& d) {
  std::string s = "digraph " + std::to_string(d.vertex_count()) + "\n";
  for (auto [v, w] : d.arrows()) s += std::to_string(v) + " " + std::to_string(w) + "\n";
  return s;
}

std::string format_graph(const Graph& g) {
  std::string s = "graph " + std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges()) s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

std::string format_poset(const Poset& p) {
  int n = p.vertex_count();
  std::string s = "poset " + std::to_string(n) + "\n";
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!p.less(u, v)) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z)
        if (p.less(u, z) && p.less(z, v)) cover = false;
      if (cover) s += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
  return s;
}

std::string format_path(const std::vector<int>& path) {
  std::string s = "path " + std::to_string(path.size()) + "\n";
  if (!path.empty()) s += join_ints(path) + "\n";
  return s;
}

std::string format_path_cover(const PathCover& cover) {
  std::string s = "pathcover " + std::to_string(cover.path_count()) + "\n";
  for (const auto& p : cover.paths()) s += join_ints(p) + "\n";
  return s;
}

std::string format_cycle_cover(const CycleCover& cover) {
  std::string s = "cyclecover " + std::to_string(cover.length()) + "\n";
  for (const auto& c : cover.cycles()) s += join_ints(c) + "\n";
  return s;
}

std::string format_orientation(const Orientation& a) {
  std::string s = "orientation " + std::to_string(a.arrows().size()) + "\n";
  for (auto [x, y] : a.arrows()) s += std::to_string(x) + " " + std::to_string(y) + "\n";
  return s;
}

std::string format_osp(const OrderedSetPartition& sigma) {
  std::string s = "osp " + std::to_string(sigma.block_count()) + "\n";
  for (const auto& b : sigma.blocks()) s += join_ints(b) + "\n";
  return s;
}

std::string format_vertex(int v) { return "vertex " + std::to_string(v) + "\n"; }

std::string one_line(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '\n') {
      if (!out.empty() && out.back() != ';') out += "; ";
    } else {
      out += c;
    }
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
  return out;
}

std::string rational_to_string(const Rational& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1)
    s += "/" + boost::multiprecision::denominator(r).str();
  return s;
}

std::string symfunc_to_text(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string name = basis_name(f.basis());
  std::string out;
  for (const auto& [lam, c] : f.terms()) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    std::string piece;
    if (mag != 1) piece = rational_to_string(mag) + " ";
    piece += name + "_{" + lam.to_string() + "}";
    if (out.empty())
      out = (negative ? "-" : "") + piece;
    else
      out += (negative ? " - " : " + ") + piece;
  }
  return out;
}

namespace {

using ordered_json = nlohmann::ordered_json;

long long to_ll(const Int& v, const char* what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::logic_error(std::string(what) + " overflows JSON integer range");
  return v.convert_to<long long>();
}

ordered_json rational_json_fields(const Rational& r) {
  ordered_json j;
  j["num"] = to_ll(boost::multiprecision::numerator(r), "numerator");
  j["den"] = to_ll(boost::multiprecision::denominator(r), "denominator");
  return j;
}

Rational rational_from_json(const ordered_json& j) {
  if (!j.contains("num") || !j.contains("den") || !j["num"].is_number_integer() ||
      !j["den"].is_number_integer())
    throw ParseError("expected integer 'num' and 'den' fields");
  long long num = j["num"].get<long long>();
  long long den = j["den"].get<long long>();
  if (den == 0) throw ParseError("denominator must be nonzero");
  return Rational(Int(num), Int(den));
}

ordered_json parse_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

}  // namespace

std::string symfunc_to_json(const SymFunc& f) {
  ordered_json j;
  j["degree"] = f.degree();
  j["basis"] = basis_name(f.basis());
  j["terms"] = ordered_json::array();
  for (const auto& [lam, c] : f.terms()) {
    ordered_json term;
    term["partition"] = lam.parts();
    term.update(rational_json_fields(c));
    j["terms"].push_back(std::move(term));
  }
  return j.dump(2) + "\n";
}

SymFunc symfunc_from_json(const std::string& text) {
  ordered_json j = parse_json(text);
  if (!j.contains("degree") || !j["degree"].is_number_integer() || !j.contains("basis") ||
      !j["basis"].is_string() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("symmetric function JSON needs degree, basis and terms");
  SymFunc f(j["degree"].get<int>(), basis_from_name(j["basis"].get<std::string>()));
  for (const auto& term : j["terms"]) {
    if (!term.contains("partition") || !term["partition"].is_array())
      throw ParseError("term needs a partition array");
    std::vector<int> parts;
    for (const auto& p : term["partition"]) {
      if (!p.is_number_integer()) throw ParseError("partition entries must be integers");
      parts.push_back(p.get<int>());
    }
    try {
      f.add_term(Partition(std::move(parts)), rational_from_json(term));
    } catch (const DomainError& e) {
      throw ParseError(std::string("bad term: ") + e.what());
    }
  }
  return f;
}

std::string setmap_to_json(const SetMap& h) {
  ordered_json j;
  j["ground"] = h.ground();
  j["values"] = ordered_json::array();
  for (std::uint32_t s = 0; s < (std::uint32_t(1) << h.ground()); ++s) {
    if (h.value(s) == 0) continue;
    ordered_json entry;
    entry["subset"] = s;
    entry.update(rational_json_fields(h.value(s)));
    j["values"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

SetMap setmap_from_json(const std::string& text) {
  ordered_json j = parse_json(text);
  if (!j.contains("ground") || !j["ground"].is_number_integer() || !j.contains("values") ||
      !j["values"].is_array())
    throw ParseError("set map JSON needs ground and values");
  int ground = j["ground"].get<int>();
  SetMap h = [&] {
    try {
      return SetMap(ground);
    } catch (const DomainError& e) {
      throw ParseError(std::string("bad set map: ") + e.what());
    }
  }();
  for (const auto& entry : j["values"]) {
    if (!entry.contains("subset") || !entry["subset"].is_number_integer())
      throw ParseError("set map entry needs an integer subset");
    long long subset = entry["subset"].get<long long>();
    if (subset < 0 || subset >= (1LL << ground))
      throw ParseError("set map entry subset outside the ground set");
    h.set_value(static_cast<std::uint32_t>(subset), rational_from_json(entry));
  }
  return h;
}

}  // namespace cyclecover
