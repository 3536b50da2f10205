#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace cyclecover {

// Integer partition: weakly decreasing positive parts.  The empty partition
// (of 0) is allowed; it shows up as the unit in products.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // sorts descending, rejects parts < 1

  static Partition single(int part);
  static Partition ones(int n);

  const std::vector<int>& parts() const { return parts_; }
  int sum() const;
  int length() const { return static_cast<int>(parts_.size()); }
  std::map<int, int> multiplicities() const;  // part value -> how often it occurs

  std::string to_string() const;  // "3,1"; empty string for the empty partition

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Multiset union of parts, e.g. (3,1) * (2,1) -> (3,2,1,1).
Partition merge_partitions(const Partition& a, const Partition& b);

// All partitions of n in a fixed deterministic order.
std::vector<Partition> all_partitions(int n);

}  // namespace cyclecover
