#include "cyclecover/covers.hpp"

#include <algorithm>
#include <bit>

#include "cyclecover/errors.hpp"

namespace cyclecover {

namespace {

// Checks that the given groups are nonempty, pairwise disjoint and jointly
// cover exactly {0..total-1}; returns the total count.
int check_cover(const std::vector<std::vector<int>>& groups, const char* what) {
  std::uint64_t seen = 0;
  int total = 0;
  for (const auto& g : groups) {
    if (g.empty()) throw DomainError(std::string(what) + " contains an empty block");
    for (int v : g) {
      if (v < 0 || v >= 64 || (seen >> v) & 1)
        throw DomainError(std::string(what) + " blocks must be disjoint nonnegative vertices");
      seen |= std::uint64_t(1) << v;
      ++total;
    }
  }
  if (total > 0 && seen != (total >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << total) - 1)))
    throw DomainError(std::string(what) + " must cover an initial segment 0..n-1");
  return total;
}

}  // namespace

PathCover::PathCover(std::vector<std::vector<int>> paths) : paths_(std::move(paths)) {
  check_cover(paths_, "path cover");
  std::sort(paths_.begin(), paths_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

int PathCover::vertex_count() const {
  int n = 0;
  for (const auto& p : paths_) n += static_cast<int>(p.size());
  return n;
}

Partition PathCover::type() const {
  std::vector<int> sizes;
  for (const auto& p : paths_) sizes.push_back(static_cast<int>(p.size()));
  return Partition(std::move(sizes));
}

CycleCover::CycleCover(std::vector<std::vector<int>> cycles) : cycles_(std::move(cycles)) {
  check_cover(cycles_, "cycle cover");
  for (auto& c : cycles_) {
    auto min_it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), min_it, c.end());
  }
  std::sort(cycles_.begin(), cycles_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

int CycleCover::weight() const {
  int n = 0;
  for (const auto& c : cycles_) n += static_cast<int>(c.size());
  return n;
}

Partition CycleCover::type() const {
  std::vector<int> sizes;
  for (const auto& c : cycles_) sizes.push_back(static_cast<int>(c.size()));
  return Partition(std::move(sizes));
}

Partition SetPartition::type() const {
  std::vector<int> sizes;
  for (std::uint32_t b : blocks) sizes.push_back(std::popcount(b));
  return Partition(std::move(sizes));
}

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  check_cover(blocks_, "ordered set partition");
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
}

int OrderedSetPartition::vertex_count() const {
  int n = 0;
  for (const auto& b : blocks_) n += static_cast<int>(b.size());
  return n;
}

Partition OrderedSetPartition::type() const {
  std::vector<int> sizes;
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return Partition(std::move(sizes));
}

}  // namespace cyclecover
