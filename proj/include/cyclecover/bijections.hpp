#pragma once

#include <utility>
#include <vector>

#include "cyclecover/covers.hpp"
#include "cyclecover/graphs.hpp"

namespace cyclecover {

// One peeling step of the path-to-cycle-cover bijection: the remaining path
// splits as rho (on s) followed by a suffix (on t) that closes into a cycle.
// When s is nonempty, the last vertex of rho exceeds every vertex of t in the
// reference order.
struct FoataQuadruple {
  std::vector<int> s;      // prefix vertices, ascending
  std::vector<int> t;      // suffix vertices, ascending
  std::vector<int> rho;    // remaining path, in path order
  std::vector<int> cycle;  // detached cycle, starting at the suffix head
};

// The path/cycle-cover bijection for an acyclic digraph d, both directions
// acting on the complement of d: Hamiltonian paths of complement(d)
// correspond to cycle covers of complement(d).  The reference vertex order is
// the lexicographically smallest topological order of d.
CycleCover foata_path_to_cycles(const Digraph& d, const std::vector<int>& path,
                                std::vector<FoataQuadruple>* trace = nullptr);
std::vector<int> foata_cycles_to_path(const Digraph& d, const CycleCover& cover);

// Pairing between (vertex, directed spanning tree of complement(d)) pairs and
// functional subdigraphs of complement(d) (every vertex exactly one
// out-arrow), for acyclic d.  The tree's unique root is where every arrow
// walk ends; `vertex` is arbitrary.
Digraph tree_to_functional(const Digraph& d, int vertex, const Digraph& tree);
std::pair<int, Digraph> functional_to_tree(const Digraph& d, const Digraph& functional);

// Shattering: mutually inverse maps between weakly decreasing Hamiltonian
// paths of a poset (Hamiltonian paths of the complement of its order digraph)
// and acyclic orientations of its incomparability graph.
//   r orients every inc-edge from the later path vertex to the earlier one;
//   s repeatedly detaches the poset-greatest sink.
Orientation shatter_r(const Poset& p, const std::vector<int>& path);
std::vector<int> shatter_s(const Poset& p, const Orientation& a,
                           std::vector<std::vector<int>>* sink_trace = nullptr);

// An acyclic orientation is circular when the shatter path closes up weakly
// decreasingly (its last vertex is not below its first).  Cross-checked
// internally against the equivalent criterion "the smallest source is not
// below the greatest sink"; disagreement would be a logic error.
bool is_circular(const Poset& p, const Orientation& a);

// Second-sink walks on orientations of a connected incomparability graph:
//   t: repeatedly flip the second-greatest sink until one sink remains;
//   u: repeatedly flip the smallest source until the orientation is circular
//      (capped at 2^edges flips).
// They are mutually inverse between circular orientations with greatest sink
// v and unique-sink orientations at v.  After each t-flip the flipped vertex
// is the smallest source; after each u-flip it is the second-greatest sink
// (checked internally).
Orientation second_sink_t(const Poset& p, const Orientation& a,
                          std::vector<int>* flip_trace = nullptr);
Orientation second_sink_u(const Poset& p, const Orientation& b,
                          std::vector<int>* flip_trace = nullptr);

// Sink sequence of an acyclic orientation: repeatedly remove the current sink
// set.  The result is a stable link sequence of g, and the map is a bijection
// onto stable_link_sequences(g) with the explicit inverse below (orient every
// edge from the later block to the earlier block).
OrderedSetPartition sink_sequence_f(const Graph& g, const Orientation& a);
Orientation link_sequence_to_orientation(const Graph& g, const OrderedSetPartition& sigma);

}  // namespace cyclecover
