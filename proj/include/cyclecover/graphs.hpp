#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "cyclecover/covers.hpp"
#include "cyclecover/numeric.hpp"

namespace cyclecover {

// Vertices are always 0..n-1 and n stays small enough for bitmask rows.
inline constexpr int kMaxVertices = 16;

using VertexSet = std::uint32_t;  // bitmask over vertices

VertexSet full_vertex_set(int n);
std::vector<int> set_to_vertices(VertexSet s);

// Directed graph, loops allowed, at most one arrow per ordered pair.
// Stored as one out-neighbor bitmask per vertex.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<std::pair<int, int>>& arrows);

  int vertex_count() const { return n_; }
  bool has_arrow(int v, int w) const;
  void add_arrow(int v, int w);
  VertexSet out_row(int v) const;                  // out-neighbors of v as a mask
  int out_degree(int v) const;
  std::vector<std::pair<int, int>> arrows() const; // sorted lexicographically
  int arrow_count() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;
  friend auto operator<=>(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> out_;
};

// Simple undirected graph: no loops, no multi-edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  VertexSet neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // (u,v) with u<v, sorted
  int edge_count() const;
  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// Finite poset on 0..n-1, stored as its strict order relation (a transitive
// acyclic digraph: arrow u->v means u < v).
class Poset {
 public:
  Poset() = default;
  // Relations must already be irreflexive, transitive and acyclic.
  Poset(int n, const std::vector<std::pair<int, int>>& strict_relations);
  // Takes the transitive closure of arbitrary cover/relation pairs; rejects
  // anything whose closure would contain a cycle.
  static Poset from_relations_closure(int n, const std::vector<std::pair<int, int>>& relations);

  int vertex_count() const { return lt_.vertex_count(); }
  bool less(int u, int v) const { return lt_.has_arrow(u, v); }
  bool comparable(int u, int v) const { return less(u, v) || less(v, u); }
  const Digraph& digraph() const { return lt_; }

  friend bool operator==(const Poset&, const Poset&) = default;
  friend auto operator<=>(const Poset&, const Poset&) = default;

 private:
  Digraph lt_;
};

// An orientation of a simple graph: exactly one direction per edge, kept
// aligned with Graph::edges().
class Orientation {
 public:
  Orientation() = default;
  Orientation(Graph g, const std::vector<std::pair<int, int>>& arrows);

  const Graph& graph() const { return g_; }
  // arrows()[i] is edges()[i] with a direction chosen.
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  Digraph as_digraph() const;

  int out_degree(int v) const;
  int in_degree(int v) const;
  std::vector<int> sinks() const;    // out-degree 0, ascending
  std::vector<int> sources() const;  // in-degree 0, ascending
  bool is_acyclic() const;
  Orientation flipped(int v) const;  // reverse every arrow incident to v

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend auto operator<=>(const Orientation&, const Orientation&) = default;

 private:
  Graph g_;
  std::vector<std::pair<int, int>> arrows_;
};

// --- structural operations ---

// Complement over the full ordered-pair universe, loops included.
Digraph complement(const Digraph& d);

// Induced subdigraph on the vertices of s, relabeled to 0..|s|-1 preserving
// label order.
Digraph restrict_to(const Digraph& d, VertexSet s);
Graph restrict_to(const Graph& g, VertexSet s);

// Contract the ordered pair (v,w), v != w, into one vertex that inherits the
// in-arrows of v and the out-arrows of w; the merged vertex keeps the smaller
// of the two labels, larger labels shift down by one.  (v,w) need not be an
// arrow of d.  The merged vertex carries a loop exactly when d has arrow w->v.
Digraph contract_arrow(const Digraph& d, int v, int w);

// Contract every path of a path cover of d to a single vertex; vertex i of
// the result is the i-th path in canonical order, and i->j (loops allowed) is
// an arrow iff d has an arrow from the last vertex of path i to the first
// vertex of path j.
Digraph contract_path_cover(const Digraph& d, const PathCover& cover);

bool is_acyclic(const Digraph& d);

// Lexicographically smallest topological order; requires d acyclic.
std::vector<int> topological_order(const Digraph& d);

// Edges are the incomparable pairs of the poset.
Graph incomparability_graph(const Poset& p);

// Exact determinant of the 0/1 adjacency matrix (fraction-free elimination).
Int adjacency_determinant(const Digraph& d);

// Validation helpers shared by bijections, enumeration and the CLI.
bool is_path_of(const Digraph& d, const std::vector<int>& path);         // consecutive arrows in d
bool is_hamiltonian_path_of(const Digraph& d, const std::vector<int>& path);
bool is_path_cover_of(const Digraph& d, const PathCover& cover);
bool is_cycle_cover_of(const Digraph& d, const CycleCover& cover);

}  // namespace cyclecover
