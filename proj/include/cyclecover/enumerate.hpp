#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cyclecover/covers.hpp"
#include "cyclecover/graphs.hpp"
#include "cyclecover/numeric.hpp"
#include "cyclecover/partition.hpp"

namespace cyclecover {

// All enumerators return canonically sorted lists so reruns are byte-stable.

std::vector<std::vector<int>> hamiltonian_paths(const Digraph& d);
Int count_hamiltonian_paths(const Digraph& d);

// A Hamiltonian cycle is returned min-vertex-first; on one vertex it is the
// loop, when present.
std::vector<std::vector<int>> hamiltonian_cycles(const Digraph& d);
Int count_hamiltonian_cycles(const Digraph& d);

std::vector<CycleCover> cycle_covers(const Digraph& d);
std::vector<PathCover> path_covers(const Digraph& d);
// Only covers whose type is exactly `type`; type must be a partition of n.
std::vector<PathCover> path_covers(const Digraph& d, const Partition& type);

std::vector<Orientation> acyclic_orientations(const Graph& g);

// The disjoint union of one directed cycle per part (a part of 1 is a loop),
// on sum(lambda) vertices labeled consecutively part by part.
Digraph tau_digraph(const Partition& lambda);

// c[mu] = number of acyclic arrow subsets of tau(lambda) whose weakly
// connected components have sizes mu.
std::map<Partition, Int> c_coefficients(const Partition& lambda);

// Directed spanning trees of d (every vertex reaches the single root along
// arrows; n-1 arrows, no loops), counted by brute force over arrow subsets.
Int count_directed_trees(const Digraph& d);
std::vector<Digraph> directed_trees(const Digraph& d);

// Connected-spanning-subgraph counts of a graph: coefficient of t^k is the
// number of k-edge spanning connected subgraphs.  Identically zero when G is
// disconnected.
class EtaPolynomial {
 public:
  EtaPolynomial() = default;
  explicit EtaPolynomial(std::map<int, Int> coefficients);

  const std::map<int, Int>& coefficients() const { return coeffs_; }
  Int coefficient(int k) const;
  Int evaluate(int t) const;
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const EtaPolynomial&, const EtaPolynomial&) = default;

 private:
  std::map<int, Int> coeffs_;  // zero coefficients never stored
};

EtaPolynomial eta_polynomial(const Graph& g);

// Ordered set partitions (sigma_1, ..., sigma_k) with every block stable and
// every vertex of sigma_{s+1} adjacent to some vertex of sigma_s.
std::vector<OrderedSetPartition> stable_link_sequences(const Graph& g);

// Layering of g from seed set s: sigma_1 = s, sigma_{i+1} = unused neighbors
// of sigma_i; fails unless the layers exhaust every vertex.
OrderedSetPartition layering_j(const Graph& g, VertexSet s);

// Unordered set partitions of {0..n-1} (resp. of an arbitrary mask) in a
// fixed deterministic order.
std::vector<SetPartition> set_partitions(int n);
std::vector<SetPartition> set_partitions_of_mask(VertexSet mask);

// All partitions coarser than or equal to sigma (every block a union of
// sigma-blocks), sigma itself included.
std::vector<SetPartition> coarsenings(const SetPartition& sigma);

}  // namespace cyclecover
