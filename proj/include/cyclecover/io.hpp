#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclecover/covers.hpp"
#include "cyclecover/graphs.hpp"
#include "cyclecover/setmap.hpp"
#include "cyclecover/symfunc.hpp"

namespace cyclecover {

// Line-oriented object texts.  Every object starts with a header line
// "<kind> <count>"; arrow/edge/relation lines follow ("u v"), or block lines
// for covers and sequences.  Poset relation lines may be any generating
// relations (covers suffice); the strict order is their transitive closure
// and a cycle is a load error.  Several objects may be concatenated in one
// stream; an object body ends at the next alphabetic header line.
class ObjectReader {
 public:
  explicit ObjectReader(std::istream& in);

  bool at_end();
  std::string peek_kind();

  Digraph read_digraph();
  Graph read_graph();
  Poset read_poset();
  std::vector<int> read_path();
  PathCover read_path_cover();
  CycleCover read_cycle_cover();
  Orientation read_orientation(const Graph& host);
  OrderedSetPartition read_osp();
  int read_vertex();

 private:
  std::vector<std::string> take_line();
  std::vector<std::pair<int, int>> take_pair_lines();
  std::vector<std::vector<int>> take_blocks(int count, const char* kind);

  std::istream& in_;
  std::optional<std::vector<std::string>> pending_;
};

std::string format_digraph(const Digraph& d);
std::string format_graph(const Graph& g);
std::string format_poset(const Poset& p);  // emits cover relations
std::string format_path(const std::vector<int>& path);
std::string format_path_cover(const PathCover& cover);
std::string format_cycle_cover(const CycleCover& cover);
std::string format_orientation(const Orientation& a);
std::string format_osp(const OrderedSetPartition& sigma);
std::string format_vertex(int v);

// Multi-line object text flattened to one line (for report entries).
std::string one_line(const std::string& text);

// Human-readable rendering like "e_{2,1} + 3 e_{3}"; "0" when zero.
std::string symfunc_to_text(const SymFunc& f);

// JSON serializations; deterministic field and term order.
std::string symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const std::string& text);
std::string setmap_to_json(const SetMap& h);
SetMap setmap_from_json(const std::string& text);

std::string rational_to_string(const Rational& r);

}  // namespace cyclecover
