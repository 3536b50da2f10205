#include "cyclecover/partition.hpp"

#include <algorithm>
#include <functional>

#include "cyclecover/errors.hpp"
#include "cyclecover/numeric.hpp"

namespace cyclecover {

Int factorial(int k) {
  Int r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw DomainError("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition Partition::single(int part) { return Partition({part}); }

Partition Partition::ones(int n) { return Partition(std::vector<int>(n, 1)); }

int Partition::sum() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

std::string Partition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition merge_partitions(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // Weakly decreasing parts, largest first.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (n < 0) throw DomainError("cannot partition a negative integer");
  rec(n, n == 0 ? 1 : n);
  return out;
}

}  // namespace cyclecover
