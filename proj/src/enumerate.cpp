#include "cyclecover/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "cyclecover/errors.hpp"

namespace cyclecover {

namespace {

void require_vertices(const Digraph& d) {
  if (d.vertex_count() == 0) throw DomainError("digraph must have at least one vertex");
}

void require_vertices(const Graph& g) {
  if (g.vertex_count() == 0) throw DomainError("graph must have at least one vertex");
}

}  // namespace

std::vector<std::vector<int>> hamiltonian_paths(const Digraph& d) {
  require_vertices(d);
  int n = d.vertex_count();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  VertexSet full = full_vertex_set(n);
  // Depth-first in ascending vertex order, so the result is already sorted.
  std::function<void(int, VertexSet)> rec = [&](int last, VertexSet used) {
    if (used == full) {
      out.push_back(cur);
      return;
    }
    VertexSet next = d.out_row(last) & ~used;
    for (int w : set_to_vertices(next)) {
      cur.push_back(w);
      rec(w, used | (VertexSet(1) << w));
      cur.pop_back();
    }
  };
  for (int v = 0; v < n; ++v) {
    cur.assign(1, v);
    rec(v, VertexSet(1) << v);
  }
  return out;
}

Int count_hamiltonian_paths(const Digraph& d) {
  require_vertices(d);
  int n = d.vertex_count();
  VertexSet full = full_vertex_set(n);
  Int total = 0;
  std::function<void(int, VertexSet)> rec = [&](int last, VertexSet used) {
    if (used == full) {
      ++total;
      return;
    }
    for (int w : set_to_vertices(d.out_row(last) & ~used))
      rec(w, used | (VertexSet(1) << w));
  };
  for (int v = 0; v < n; ++v) rec(v, VertexSet(1) << v);
  return total;
}

std::vector<std::vector<int>> hamiltonian_cycles(const Digraph& d) {
  require_vertices(d);
  int n = d.vertex_count();
  std::vector<std::vector<int>> out;
  if (n == 1) {
    if (d.has_arrow(0, 0)) out.push_back({0});
    return out;
  }
  VertexSet full = full_vertex_set(n);
  std::vector<int> cur{0};  // rooting at vertex 0 counts each cycle once
  std::function<void(int, VertexSet)> rec = [&](int last, VertexSet used) {
    if (used == full) {
      if (d.has_arrow(last, 0)) out.push_back(cur);
      return;
    }
    for (int w : set_to_vertices(d.out_row(last) & ~used)) {
      cur.push_back(w);
      rec(w, used | (VertexSet(1) << w));
      cur.pop_back();
    }
  };
  rec(0, 1);
  return out;
}

Int count_hamiltonian_cycles(const Digraph& d) {
  return static_cast<Int>(hamiltonian_cycles(d).size());
}

std::vector<CycleCover> cycle_covers(const Digraph& d) {
  require_vertices(d);
  int n = d.vertex_count();
  // A cycle cover is exactly a permutation sigma with every (v, sigma(v)) an
  // arrow of d; enumerate those and split into cycles.
  std::vector<int> succ(n, -1);
  std::vector<CycleCover> out;
  std::function<void(int, VertexSet)> rec = [&](int v, VertexSet used) {
    if (v == n) {
      std::vector<std::vector<int>> cycles;
      std::vector<bool> seen(n, false);
      for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        for (int x = s; !seen[x]; x = succ[x]) {
          seen[x] = true;
          cyc.push_back(x);
        }
        cycles.push_back(std::move(cyc));
      }
      out.emplace_back(std::move(cycles));
      return;
    }
    for (int w : set_to_vertices(d.out_row(v) & ~used)) {
      succ[v] = w;
      rec(v + 1, used | (VertexSet(1) << w));
    }
    succ[v] = -1;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<PathCover> path_covers_impl(const Digraph& d, const Partition* type) {
  int n = d.vertex_count();
  // Partial permutation: succ[v] = next vertex on v's path (-1: v ends its
  // path, -2: not assigned yet).  Vertices are assigned in order and chains
  // that would close a cycle are rejected, so leaves are exactly the path
  // covers.
  std::vector<int> succ(n, -2);
  std::vector<PathCover> out;
  auto closes_cycle = [&](int v, int w) {
    int x = w;
    while (x >= 0) {
      if (x == v) return true;
      x = succ[x] >= 0 ? succ[x] : -1;
    }
    return false;
  };
  std::function<void(int, VertexSet)> rec = [&](int v, VertexSet used_targets) {
    if (v == n) {
      std::vector<std::vector<int>> paths;
      std::vector<bool> is_target(n, false);
      for (int x = 0; x < n; ++x)
        if (succ[x] >= 0) is_target[succ[x]] = true;
      for (int s = 0; s < n; ++s) {
        if (is_target[s]) continue;
        std::vector<int> path;
        for (int x = s; x >= 0; x = succ[x]) path.push_back(x);
        paths.push_back(std::move(path));
      }
      PathCover cover(std::move(paths));
      if (!type || cover.type() == *type) out.push_back(std::move(cover));
      return;
    }
    succ[v] = -1;
    rec(v + 1, used_targets);
    for (int w : set_to_vertices(d.out_row(v) & ~used_targets)) {
      if (w == v) continue;  // loops are not path arrows
      if (closes_cycle(v, w)) continue;
      succ[v] = w;
      rec(v + 1, used_targets | (VertexSet(1) << w));
    }
    succ[v] = -2;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PathCover> path_covers(const Digraph& d) {
  require_vertices(d);
  return path_covers_impl(d, nullptr);
}

std::vector<PathCover> path_covers(const Digraph& d, const Partition& type) {
  require_vertices(d);
  if (type.sum() != d.vertex_count())
    throw DomainError("type filter must be a partition of the vertex count");
  return path_covers_impl(d, &type);
}

std::vector<Orientation> acyclic_orientations(const Graph& g) {
  require_vertices(g);
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  std::vector<Orientation> out;
  for (std::uint32_t dirs = 0; dirs < (std::uint32_t(1) << m); ++dirs) {
    std::vector<std::pair<int, int>> arrows(edges.size());
    for (int i = 0; i < m; ++i) {
      auto [u, v] = edges[i];
      arrows[i] = ((dirs >> i) & 1) ? std::make_pair(v, u) : std::make_pair(u, v);
    }
    Orientation o(g, arrows);
    if (o.is_acyclic()) out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Digraph tau_digraph(const Partition& lambda) {
  int n = lambda.sum();
  Digraph d(n);
  int offset = 0;
  for (int part : lambda.parts()) {
    for (int i = 0; i < part; ++i) d.add_arrow(offset + i, offset + (i + 1) % part);
    offset += part;
  }
  return d;
}

namespace {

// Sizes of the weakly connected components of an arrow subset, all n vertices
// included (isolated vertices are singleton components).
Partition component_type(int n, const std::vector<std::pair<int, int>>& arrows,
                         std::uint32_t subset) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < arrows.size(); ++i)
    if ((subset >> i) & 1) {
      int a = find(arrows[i].first), b = find(arrows[i].second);
      if (a != b) parent[a] = b;
    }
  std::map<int, int> size;
  for (int v = 0; v < n; ++v) ++size[find(v)];
  std::vector<int> parts;
  for (auto& [root, s] : size) parts.push_back(s);
  return Partition(std::move(parts));
}

}  // namespace

std::map<Partition, Int> c_coefficients(const Partition& lambda) {
  Digraph tau = tau_digraph(lambda);
  int n = tau.vertex_count();
  auto arrows = tau.arrows();
  std::map<Partition, Int> out;
  for (std::uint32_t subset = 0; subset < (std::uint32_t(1) << arrows.size()); ++subset) {
    Digraph sub(n);
    for (size_t i = 0; i < arrows.size(); ++i)
      if ((subset >> i) & 1) sub.add_arrow(arrows[i].first, arrows[i].second);
    if (!is_acyclic(sub)) continue;
    out[component_type(n, arrows, subset)] += 1;
  }
  return out;
}

namespace {

bool is_directed_tree(int n, const std::vector<std::pair<int, int>>& arrows) {
  // Directed tree rooted at r: r has out-degree 0, every other vertex
  // out-degree 1, and every walk along successors reaches r (no cycles).
  std::vector<int> succ(n, -1);
  for (auto [v, w] : arrows) {
    if (v == w) return false;
    if (succ[v] != -1) return false;
    succ[v] = w;
  }
  int root = -1;
  for (int v = 0; v < n; ++v)
    if (succ[v] == -1) {
      if (root != -1) return false;
      root = v;
    }
  if (root == -1) return false;
  for (int v = 0; v < n; ++v) {
    int x = v;
    for (int steps = 0; x != root; ++steps) {
      if (steps > n) return false;
      x = succ[x];
    }
  }
  return true;
}

}  // namespace

std::vector<Digraph> directed_trees(const Digraph& d) {
  require_vertices(d);
  int n = d.vertex_count();
  auto arrows = d.arrows();
  int m = static_cast<int>(arrows.size());
  std::vector<Digraph> out;
  if (n == 1) {
    out.emplace_back(1);  // the rootless-arrow tree on one vertex
    return out;
  }
  // All (n-1)-subsets of arrows, tested directly.
  std::vector<int> idx(n - 1);
  std::function<void(int, int)> choose = [&](int start, int k) {
    if (k == n - 1) {
      std::vector<std::pair<int, int>> subset;
      for (int i : idx) subset.push_back(arrows[i]);
      if (is_directed_tree(n, subset)) out.emplace_back(n, subset);
      return;
    }
    for (int i = start; i < m; ++i) {
      idx[k] = i;
      choose(i + 1, k + 1);
    }
  };
  choose(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Int count_directed_trees(const Digraph& d) {
  return static_cast<Int>(directed_trees(d).size());
}

EtaPolynomial::EtaPolynomial(std::map<int, Int> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

Int EtaPolynomial::coefficient(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Int(0) : it->second;
}

Int EtaPolynomial::evaluate(int t) const {
  Int total = 0;
  for (auto& [k, c] : coeffs_) {
    Int power = 1;
    for (int i = 0; i < k; ++i) power *= t;
    total += c * power;
  }
  return total;
}

EtaPolynomial eta_polynomial(const Graph& g) {
  require_vertices(g);
  int n = g.vertex_count();
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  std::map<int, Int> coeffs;
  for (std::uint32_t subset = 0; subset < (std::uint32_t(1) << m); ++subset) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = n;
    for (int i = 0; i < m; ++i)
      if ((subset >> i) & 1) {
        int a = find(edges[i].first), b = find(edges[i].second);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
    if (components == 1) coeffs[std::popcount(subset)] += 1;
  }
  return EtaPolynomial(std::move(coeffs));
}

std::vector<SetPartition> set_partitions_of_mask(VertexSet mask) {
  std::vector<int> verts = set_to_vertices(mask);
  int k = static_cast<int>(verts.size());
  std::vector<SetPartition> out;
  if (k == 0) {
    out.push_back(SetPartition{});
    return out;
  }
  // Restricted growth strings over the mask's vertices in ascending order.
  std::vector<int> assign(k, 0);
  std::function<void(int, int)> rec = [&](int i, int max_block) {
    if (i == k) {
      std::vector<std::uint32_t> blocks(max_block, 0);
      for (int j = 0; j < k; ++j) blocks[assign[j]] |= std::uint32_t(1) << verts[j];
      out.push_back(SetPartition{std::move(blocks)});
      return;
    }
    for (int b = 0; b <= max_block; ++b) {
      assign[i] = b;
      rec(i + 1, std::max(max_block, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

std::vector<SetPartition> set_partitions(int n) {
  if (n < 0) throw DomainError("set partition count requires n >= 0");
  return set_partitions_of_mask(full_vertex_set(n));
}

std::vector<SetPartition> coarsenings(const SetPartition& sigma) {
  int k = static_cast<int>(sigma.blocks.size());
  std::vector<SetPartition> out;
  // Partition the blocks, then union each group of blocks.
  for (const SetPartition& grouping : set_partitions(k)) {
    std::vector<std::uint32_t> merged;
    for (std::uint32_t group : grouping.blocks) {
      std::uint32_t blk = 0;
      for (int i : set_to_vertices(group)) blk |= sigma.blocks[i];
      merged.push_back(blk);
    }
    std::sort(merged.begin(), merged.end(),
              [](std::uint32_t a, std::uint32_t b) {
                return std::countr_zero(a) < std::countr_zero(b);
              });
    out.push_back(SetPartition{std::move(merged)});
  }
  return out;
}

std::vector<OrderedSetPartition> stable_link_sequences(const Graph& g) {
  require_vertices(g);
  std::vector<OrderedSetPartition> out;
  for (const SetPartition& sp : set_partitions(g.vertex_count())) {
    // Every block must be stable (no internal edge).
    bool stable = true;
    for (std::uint32_t b : sp.blocks) {
      for (int v : set_to_vertices(b))
        if ((g.neighbors(v) & b) != 0) {
          stable = false;
          break;
        }
      if (!stable) break;
    }
    if (!stable) continue;
    int k = static_cast<int>(sp.blocks.size());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool linked = true;
      for (int s = 1; s < k && linked; ++s) {
        std::uint32_t prev = sp.blocks[perm[s - 1]];
        for (int v : set_to_vertices(sp.blocks[perm[s]]))
          if ((g.neighbors(v) & prev) == 0) {
            linked = false;
            break;
          }
      }
      if (linked) {
        std::vector<std::vector<int>> blocks;
        for (int i = 0; i < k; ++i) blocks.push_back(set_to_vertices(sp.blocks[perm[i]]));
        out.emplace_back(std::move(blocks));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrderedSetPartition layering_j(const Graph& g, VertexSet s) {
  require_vertices(g);
  int n = g.vertex_count();
  if (s == 0 || (s & ~full_vertex_set(n)) != 0)
    throw DomainError("seed set must be a nonempty subset of the vertices");
  std::vector<std::vector<int>> blocks;
  VertexSet used = s;
  VertexSet layer = s;
  while (layer) {
    blocks.push_back(set_to_vertices(layer));
    VertexSet next = 0;
    for (int v : set_to_vertices(layer)) next |= g.neighbors(v);
    layer = next & ~used;
    used |= layer;
  }
  if (used != full_vertex_set(n))
    throw DomainError("graph is not anchored by the seed set: layers do not exhaust it");
  return OrderedSetPartition(std::move(blocks));
}

}  // namespace cyclecover
