#include "cyclecover/bijections.hpp"

#include <algorithm>
#include <bit>

#include "cyclecover/errors.hpp"

namespace cyclecover {

namespace {

std::vector<int> rank_in_order(const std::vector<int>& order) {
  std::vector<int> pos(order.size());
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return pos;
}

void require_complement_path(const Digraph& d, const std::vector<int>& path) {
  if (!is_hamiltonian_path_of(complement(d), path))
    throw DomainError("path is not a Hamiltonian path of the complement");
}

}  // namespace

CycleCover foata_path_to_cycles(const Digraph& d, const std::vector<int>& path,
                                std::vector<FoataQuadruple>* trace) {
  if (!is_acyclic(d)) throw DomainError("digraph is not acyclic");
  require_complement_path(d, path);
  std::vector<int> pos = rank_in_order(topological_order(d));

  std::vector<std::vector<int>> cycles;
  std::vector<int> f = path;
  while (!f.empty()) {
    int z = f.back();
    // Split after the last vertex that beats z in the reference order; the
    // whole path becomes the suffix when no vertex does.
    int split = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
      if (pos[f[i]] > pos[z]) {
        split = i + 1;
        break;
      }
    std::vector<int> rho(f.begin(), f.begin() + split);
    std::vector<int> cycle(f.begin() + split, f.end());
    if (trace) {
      FoataQuadruple q;
      q.rho = rho;
      q.cycle = cycle;
      q.s = rho;
      q.t = cycle;
      std::sort(q.s.begin(), q.s.end());
      std::sort(q.t.begin(), q.t.end());
      trace->push_back(std::move(q));
    }
    cycles.push_back(std::move(cycle));
    f = std::move(rho);
  }
  CycleCover cover{std::move(cycles)};
  if (!is_cycle_cover_of(complement(d), cover))
    throw std::logic_error("peel produced an invalid cycle cover");
  return cover;
}

std::vector<int> foata_cycles_to_path(const Digraph& d, const CycleCover& cover) {
  if (!is_acyclic(d)) throw DomainError("digraph is not acyclic");
  if (!is_cycle_cover_of(complement(d), cover))
    throw DomainError("not a cycle cover of the complement");
  std::vector<int> pos = rank_in_order(topological_order(d));

  // Splice cycles in decreasing order of their greatest vertex (in the
  // reference order); each cycle is opened just after that vertex.
  std::vector<std::vector<int>> cycles = cover.cycles();
  auto greatest = [&](const std::vector<int>& c) {
    int best = c[0];
    for (int v : c)
      if (pos[v] > pos[best]) best = v;
    return best;
  };
  std::sort(cycles.begin(), cycles.end(), [&](const auto& a, const auto& b) {
    return pos[greatest(a)] > pos[greatest(b)];
  });
  std::vector<int> path;
  for (const auto& c : cycles) {
    int z = greatest(c);
    size_t at = static_cast<size_t>(std::find(c.begin(), c.end(), z) - c.begin());
    for (size_t k = 1; k <= c.size(); ++k) path.push_back(c[(at + k) % c.size()]);
  }
  if (!is_hamiltonian_path_of(complement(d), path))
    throw std::logic_error("splice produced an invalid path");
  return path;
}

Digraph tree_to_functional(const Digraph& d, int vertex, const Digraph& tree) {
  if (!is_acyclic(d)) throw DomainError("digraph is not acyclic");
  int n = d.vertex_count();
  if (vertex < 0 || vertex >= n) throw DomainError("vertex out of range");
  if (tree.vertex_count() != n) throw DomainError("tree vertex count mismatch");
  Digraph dbar = complement(d);

  // Validate the directed spanning tree: arrows in the complement, one
  // out-arrow except at the root, every walk reaches the root.
  std::vector<int> succ(n, -1);
  int root = -1;
  for (auto [v, w] : tree.arrows()) {
    if (!dbar.has_arrow(v, w)) throw DomainError("tree uses an arrow outside the complement");
    if (v == w || succ[v] != -1) throw DomainError("tree must have at most one out-arrow per vertex");
    succ[v] = w;
  }
  for (int v = 0; v < n; ++v)
    if (succ[v] == -1) {
      if (root != -1) throw DomainError("tree must have exactly one root");
      root = v;
    }
  if (root == -1) throw DomainError("tree must have exactly one root");
  for (int v = 0; v < n; ++v) {
    int x = v;
    for (int steps = 0; x != root; ++steps) {
      if (steps > n) throw DomainError("tree contains a cycle");
      x = succ[x];
    }
  }

  // The walk from the chosen vertex to the root turns into cycles via the
  // path/cycle-cover bijection on the restriction; off-walk arrows survive.
  std::vector<int> walk;
  for (int x = vertex;; x = succ[x]) {
    walk.push_back(x);
    if (x == root) break;
  }
  std::vector<int> verts = walk;
  std::sort(verts.begin(), verts.end());
  VertexSet mask = 0;
  for (int v : verts) mask |= VertexSet(1) << v;
  std::vector<int> local(n, -1);
  for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);

  std::vector<int> walk_local;
  for (int v : walk) walk_local.push_back(local[v]);
  CycleCover cycles_local = foata_path_to_cycles(restrict_to(d, mask), walk_local);

  Digraph out(n);
  for (const auto& c : cycles_local.cycles())
    for (size_t i = 0; i < c.size(); ++i)
      out.add_arrow(verts[c[i]], verts[c[(i + 1) % c.size()]]);
  for (int v = 0; v < n; ++v)
    if (succ[v] != -1 && local[v] == -1) out.add_arrow(v, succ[v]);
  return out;
}

std::pair<int, Digraph> functional_to_tree(const Digraph& d, const Digraph& functional) {
  if (!is_acyclic(d)) throw DomainError("digraph is not acyclic");
  int n = d.vertex_count();
  if (functional.vertex_count() != n) throw DomainError("functional vertex count mismatch");
  Digraph dbar = complement(d);
  std::vector<int> succ(n, -1);
  for (auto [v, w] : functional.arrows()) {
    if (!dbar.has_arrow(v, w))
      throw DomainError("functional digraph uses an arrow outside the complement");
    if (succ[v] != -1) throw DomainError("functional digraph must have one out-arrow per vertex");
    succ[v] = w;
  }
  for (int v = 0; v < n; ++v)
    if (succ[v] == -1) throw DomainError("functional digraph must have one out-arrow per vertex");

  // Core = vertices on cycles: peel in-degree-0 vertices repeatedly.
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v) ++indeg[succ[v]];
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  std::vector<bool> dead(n, false);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    dead[v] = true;
    if (--indeg[succ[v]] == 0) stack.push_back(succ[v]);
  }

  std::vector<int> verts;
  for (int v = 0; v < n; ++v)
    if (!dead[v]) verts.push_back(v);
  VertexSet mask = 0;
  for (int v : verts) mask |= VertexSet(1) << v;
  std::vector<int> local(n, -1);
  for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> cycles_local;
  std::vector<bool> seen(n, false);
  for (int s : verts) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int x = s; !seen[x]; x = succ[x]) {
      seen[x] = true;
      cyc.push_back(local[x]);
    }
    cycles_local.push_back(std::move(cyc));
  }
  std::vector<int> walk_local =
      foata_cycles_to_path(restrict_to(d, mask), CycleCover{std::move(cycles_local)});

  Digraph tree(n);
  for (size_t i = 0; i + 1 < walk_local.size(); ++i)
    tree.add_arrow(verts[walk_local[i]], verts[walk_local[i + 1]]);
  for (int v = 0; v < n; ++v)
    if (dead[v]) tree.add_arrow(v, succ[v]);
  return {verts[walk_local.front()], tree};
}

namespace {

void require_inc_orientation(const Poset& p, const Orientation& a) {
  if (a.graph() != incomparability_graph(p))
    throw DomainError("orientation is not an orientation of the incomparability graph");
}

// Poset-greatest element of a sink/source list; they are pairwise comparable,
// so the maximum is total.
int poset_greatest(const Poset& p, const std::vector<int>& vs, const char* what) {
  for (int cand : vs) {
    bool top = true;
    for (int other : vs)
      if (other != cand && !p.less(other, cand)) {
        top = false;
        break;
      }
    if (top) return cand;
  }
  throw std::logic_error(std::string(what) + " are not totally ordered in the poset");
}

int poset_smallest(const Poset& p, const std::vector<int>& vs, const char* what) {
  for (int cand : vs) {
    bool bottom = true;
    for (int other : vs)
      if (other != cand && !p.less(cand, other)) {
        bottom = false;
        break;
      }
    if (bottom) return cand;
  }
  throw std::logic_error(std::string(what) + " are not totally ordered in the poset");
}

}  // namespace

Orientation shatter_r(const Poset& p, const std::vector<int>& path) {
  if (!is_hamiltonian_path_of(complement(p.digraph()), path))
    throw DomainError("path is not a weakly decreasing Hamiltonian path of the poset");
  Graph inc = incomparability_graph(p);
  std::vector<int> pos = rank_in_order(path);
  std::vector<std::pair<int, int>> arrows;
  for (auto [u, v] : inc.edges())
    arrows.emplace_back(pos[u] > pos[v] ? std::make_pair(u, v) : std::make_pair(v, u));
  return Orientation(std::move(inc), arrows);
}

std::vector<int> shatter_s(const Poset& p, const Orientation& a,
                           std::vector<std::vector<int>>* sink_trace) {
  require_inc_orientation(p, a);
  if (!a.is_acyclic()) throw DomainError("orientation is not acyclic");
  int n = p.vertex_count();
  // Peel the poset-greatest live sink; sinks are pairwise nonadjacent in the
  // incomparability graph, hence pairwise comparable.
  std::vector<bool> alive(n, true);
  std::vector<int> path;
  for (int step = 0; step < n; ++step) {
    std::vector<int> sinks;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      bool sink = true;
      for (auto [x, y] : a.arrows())
        if (x == v && alive[y]) {
          sink = false;
          break;
        }
      if (sink) sinks.push_back(v);
    }
    if (sink_trace) sink_trace->push_back(sinks);
    int top = poset_greatest(p, sinks, "live sinks");
    path.push_back(top);
    alive[top] = false;
  }
  return path;
}

bool is_circular(const Poset& p, const Orientation& a) {
  std::vector<int> path = shatter_s(p, a);
  bool closing_weakly_decreasing = !p.less(path.back(), path.front());
  int small_source = poset_smallest(p, a.sources(), "sources");
  int great_sink = poset_greatest(p, a.sinks(), "sinks");
  bool source_sink = !p.less(small_source, great_sink);
  if (closing_weakly_decreasing != source_sink)
    throw std::logic_error("circularity criteria disagree");
  return closing_weakly_decreasing;
}

namespace {

void require_connected_inc(const Poset& p) {
  if (!incomparability_graph(p).is_connected())
    throw DomainError("incomparability graph is not connected");
}

}  // namespace

Orientation second_sink_t(const Poset& p, const Orientation& a, std::vector<int>* flip_trace) {
  require_connected_inc(p);
  require_inc_orientation(p, a);
  if (!a.is_acyclic()) throw DomainError("orientation is not acyclic");
  if (!is_circular(p, a)) throw DomainError("orientation is not circular");
  Orientation cur = a;
  long long cap = 1LL << std::min(40, a.graph().edge_count());
  for (long long steps = 0;; ++steps) {
    std::vector<int> sinks = cur.sinks();
    if (sinks.size() <= 1) break;
    if (steps > cap) throw std::logic_error("second-sink walk exceeded its cap");
    int top = poset_greatest(p, sinks, "sinks");
    std::vector<int> rest;
    for (int v : sinks)
      if (v != top) rest.push_back(v);
    int second = poset_greatest(p, rest, "sinks");
    cur = cur.flipped(second);
    if (flip_trace) flip_trace->push_back(second);
    if (poset_smallest(p, cur.sources(), "sources") != second)
      throw std::logic_error("flipped sink did not become the smallest source");
  }
  return cur;
}

Orientation second_sink_u(const Poset& p, const Orientation& b, std::vector<int>* flip_trace) {
  require_connected_inc(p);
  require_inc_orientation(p, b);
  if (!b.is_acyclic()) throw DomainError("orientation is not acyclic");
  if (b.sinks().size() != 1) throw DomainError("orientation must have exactly one sink");
  Orientation cur = b;
  long long cap = 1LL << std::min(40, b.graph().edge_count());
  long long steps = 0;
  while (!is_circular(p, cur)) {
    if (++steps > cap) throw DomainError("second-sink inverse walk exceeded its iteration cap");
    int bottom = poset_smallest(p, cur.sources(), "sources");
    cur = cur.flipped(bottom);
    if (flip_trace) flip_trace->push_back(bottom);
    std::vector<int> sinks = cur.sinks();
    int top = poset_greatest(p, sinks, "sinks");
    std::vector<int> rest;
    for (int v : sinks)
      if (v != top) rest.push_back(v);
    if (rest.empty() || poset_greatest(p, rest, "sinks") != bottom)
      throw std::logic_error("flipped source did not become the second-greatest sink");
  }
  return cur;
}

OrderedSetPartition sink_sequence_f(const Graph& g, const Orientation& a) {
  if (a.graph() != g) throw DomainError("orientation does not belong to the graph");
  if (!a.is_acyclic()) throw DomainError("orientation is not acyclic");
  int n = g.vertex_count();
  if (n == 0) throw DomainError("graph must have at least one vertex");
  std::vector<bool> alive(n, true);
  int remaining = n;
  std::vector<std::vector<int>> blocks;
  while (remaining > 0) {
    std::vector<int> sinks;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      bool sink = true;
      for (auto [x, y] : a.arrows())
        if (x == v && alive[y]) {
          sink = false;
          break;
        }
      if (sink) sinks.push_back(v);
    }
    if (sinks.empty()) throw std::logic_error("acyclic orientation without a live sink");
    for (int v : sinks) alive[v] = false;
    remaining -= static_cast<int>(sinks.size());
    blocks.push_back(std::move(sinks));
  }
  return OrderedSetPartition(std::move(blocks));
}

Orientation link_sequence_to_orientation(const Graph& g, const OrderedSetPartition& sigma) {
  if (sigma.vertex_count() != g.vertex_count())
    throw DomainError("sequence does not cover the graph's vertices");
  int n = g.vertex_count();
  if (n == 0) throw DomainError("graph must have at least one vertex");
  std::vector<int> block_of(n, -1);
  for (int i = 0; i < sigma.block_count(); ++i)
    for (int v : sigma.blocks()[i]) block_of[v] = i;
  // Stability and linkage make sigma a stable link sequence.
  for (auto [u, v] : g.edges())
    if (block_of[u] == block_of[v])
      throw DomainError("sequence has an edge inside a block (not stable)");
  for (int i = 1; i < sigma.block_count(); ++i) {
    std::uint32_t prev = 0;
    for (int v : sigma.blocks()[i - 1]) prev |= std::uint32_t(1) << v;
    for (int v : sigma.blocks()[i])
      if ((g.neighbors(v) & prev) == 0)
        throw DomainError("sequence vertex has no neighbor in the preceding block");
  }
  std::vector<std::pair<int, int>> arrows;
  for (auto [u, v] : g.edges())
    arrows.emplace_back(block_of[u] > block_of[v] ? std::make_pair(u, v) : std::make_pair(v, u));
  return Orientation(g, arrows);
}

}  // namespace cyclecover
