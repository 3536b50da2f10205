#pragma once

#include <cstdint>
#include <vector>

#include "cyclecover/graphs.hpp"
#include "cyclecover/numeric.hpp"

namespace cyclecover {

inline constexpr int kMaxSetMapGround = 12;

// A rational-valued function on the subsets of {0..ground-1}, with the
// convolution product (h*g)(U) = sum over disjoint splits S+T=U of h(S)g(T).
// The identity is 1 on the empty set, 0 elsewhere; h is invertible exactly
// when h(empty) != 0.
class SetMap {
 public:
  SetMap() = default;
  explicit SetMap(int ground);
  static SetMap identity(int ground);

  int ground() const { return ground_; }
  const Rational& value(std::uint32_t subset) const;
  void set_value(std::uint32_t subset, const Rational& v);

  friend bool operator==(const SetMap&, const SetMap&) = default;

 private:
  int ground_ = 0;
  std::vector<Rational> values_;
};

SetMap setmap_multiply(const SetMap& h, const SetMap& g);
SetMap setmap_inverse(const SetMap& h);  // requires h(empty) != 0

// h(S) = number of Hamiltonian paths of d restricted to S; h(empty) = 1.
SetMap path_setmap(const Digraph& d);

// A split of the vertex set into a path on d (covering S) and a path on
// complement(d) (covering T); either path may be empty.
struct PathPair {
  std::vector<int> host_path;        // Hamiltonian path of d restricted to its vertices
  std::vector<int> complement_path;  // same on the complement
  friend bool operator==(const PathPair&, const PathPair&) = default;
  friend auto operator<=>(const PathPair&, const PathPair&) = default;
};

// Sign-reversing, fixed-point-free involution on path pairs witnessing
//   sum over splits S+T=V of (-1)^|T| pi(d|S) pi(dbar|T) = 0:
// it moves one vertex across the boundary between the two paths.
PathPair pathsum_involution(const Digraph& d, const PathPair& pair);

// The signed sum above, computed directly (zero for every digraph).
Int pathsum_signed_sum(const Digraph& d);
// All path pairs of d, canonically sorted (used by censuses and tests).
std::vector<PathPair> all_path_pairs(const Digraph& d);

// Reciprocity for an invertible set map h on a nonempty subset s of its
// ground set: the omega image of  sum_{sigma partitions s} mt_{t(sigma)}
// prod_{T in sigma} h(T)  equals the same sum built from 1/h, times (-1)^|s|.
bool lass_reciprocity_check(const SetMap& h, std::uint32_t s);

}  // namespace cyclecover
