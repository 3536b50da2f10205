#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cyclecover/partition.hpp"

namespace cyclecover {

// Vertex-disjoint directed paths jointly covering {0..n-1}.  Canonical form:
// paths listed in increasing order of their first vertex.  A single vertex is
// a path of size 1; the arrow sequence of the cover is the set of consecutive
// pairs inside each path.
class PathCover {
 public:
  PathCover() = default;
  explicit PathCover(std::vector<std::vector<int>> paths);

  const std::vector<std::vector<int>>& paths() const { return paths_; }
  int vertex_count() const;            // W: total vertices covered
  int path_count() const { return static_cast<int>(paths_.size()); }
  Partition type() const;              // path sizes, weakly decreasing

  friend bool operator==(const PathCover&, const PathCover&) = default;
  friend auto operator<=>(const PathCover&, const PathCover&) = default;

 private:
  std::vector<std::vector<int>> paths_;
};

// Vertex-disjoint directed cycles jointly covering {0..n-1}.  A cycle may be a
// loop (size 1).  Canonical form: each cycle rotated so its minimum vertex is
// first, cycles listed in increasing order of that minimum.
class CycleCover {
 public:
  CycleCover() = default;
  explicit CycleCover(std::vector<std::vector<int>> cycles);

  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  int weight() const;                  // W: total vertices covered
  int length() const { return static_cast<int>(cycles_.size()); }  // l: cycle count
  Partition type() const;              // cycle sizes, weakly decreasing

  friend bool operator==(const CycleCover&, const CycleCover&) = default;
  friend auto operator<=>(const CycleCover&, const CycleCover&) = default;

 private:
  std::vector<std::vector<int>> cycles_;
};

// Unordered set partition of {0..n-1}; blocks stored as bitmasks sorted by
// their lowest vertex.
struct SetPartition {
  std::vector<std::uint32_t> blocks;

  Partition type() const;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
};

// Ordered set partition (sequence of nonempty disjoint blocks covering
// {0..n-1}); block order is significant, vertices inside a block are sorted.
class OrderedSetPartition {
 public:
  OrderedSetPartition() = default;
  explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int vertex_count() const;
  Partition type() const;

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
  friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

}  // namespace cyclecover
