#include "cyclecover/graphs.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cyclecover/errors.hpp"

namespace cyclecover {

VertexSet full_vertex_set(int n) {
  return n == 0 ? 0 : (VertexSet(1) << n) - 1;
}

std::vector<int> set_to_vertices(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices)
    throw DomainError("vertex count must be between 0 and " + std::to_string(kMaxVertices));
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) throw DomainError("vertex out of range");
}

}  // namespace

Digraph::Digraph(int n) : n_(n) {
  check_vertex_count(n);
  out_.assign(n, 0);
}

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arrows) : Digraph(n) {
  for (auto [v, w] : arrows) add_arrow(v, w);
}

bool Digraph::has_arrow(int v, int w) const {
  check_vertex(n_, v);
  check_vertex(n_, w);
  return (out_[v] >> w) & 1;
}

void Digraph::add_arrow(int v, int w) {
  check_vertex(n_, v);
  check_vertex(n_, w);
  out_[v] |= VertexSet(1) << w;
}

VertexSet Digraph::out_row(int v) const {
  check_vertex(n_, v);
  return out_[v];
}

int Digraph::out_degree(int v) const { return std::popcount(out_row(v)); }

std::vector<std::pair<int, int>> Digraph::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < n_; ++v)
    for (int w : set_to_vertices(out_[v])) out.emplace_back(v, w);
  return out;
}

int Digraph::arrow_count() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m += std::popcount(out_[v]);
  return m;
}

Graph::Graph(int n) : n_(n) {
  check_vertex_count(n);
  adj_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(n_, u);
  check_vertex(n_, v);
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw DomainError("simple graph cannot carry a loop");
  adj_[u] |= VertexSet(1) << v;
  adj_[v] |= VertexSet(1) << u;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(n_, v);
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if ((adj_[u] >> v) & 1) out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m += std::popcount(adj_[v]);
  return m / 2;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  VertexSet seen = 1;
  VertexSet frontier = 1;
  while (frontier) {
    VertexSet next = 0;
    for (int v : set_to_vertices(frontier)) next |= adj_[v];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == full_vertex_set(n_);
}

Poset::Poset(int n, const std::vector<std::pair<int, int>>& strict_relations)
    : lt_(n, strict_relations) {
  for (int u = 0; u < n; ++u) {
    if (lt_.has_arrow(u, u)) throw DomainError("poset relation must be irreflexive");
    for (int v : set_to_vertices(lt_.out_row(u))) {
      if (lt_.has_arrow(v, u)) throw DomainError("poset relation must be antisymmetric");
      if ((lt_.out_row(v) & ~lt_.out_row(u)) != 0)
        throw DomainError("poset relation must be transitive");
    }
  }
}

Poset Poset::from_relations_closure(int n, const std::vector<std::pair<int, int>>& relations) {
  Digraph d(n, relations);
  // Warshall closure on bit rows.
  std::vector<VertexSet> row(n);
  for (int v = 0; v < n; ++v) row[v] = d.out_row(v);
  for (int k = 0; k < n; ++k)
    for (int v = 0; v < n; ++v)
      if ((row[v] >> k) & 1) row[v] |= row[k];
  std::vector<std::pair<int, int>> closed;
  for (int v = 0; v < n; ++v) {
    if ((row[v] >> v) & 1) throw DomainError("relations close into a cycle");
    for (int w : set_to_vertices(row[v])) closed.emplace_back(v, w);
  }
  return Poset(n, closed);
}

Orientation::Orientation(Graph g, const std::vector<std::pair<int, int>>& arrows)
    : g_(std::move(g)) {
  auto edges = g_.edges();
  arrows_.assign(edges.size(), {-1, -1});
  if (arrows.size() != edges.size())
    throw DomainError("orientation must direct every edge exactly once");
  for (auto [a, b] : arrows) {
    auto key = std::minmax(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(),
                               std::make_pair(key.first, key.second));
    if (it == edges.end() || *it != std::make_pair(key.first, key.second))
      throw DomainError("orientation directs a pair that is not an edge");
    size_t idx = static_cast<size_t>(it - edges.begin());
    if (arrows_[idx].first != -1) throw DomainError("orientation directs an edge twice");
    arrows_[idx] = {a, b};
  }
}

Digraph Orientation::as_digraph() const {
  Digraph d(g_.vertex_count());
  for (auto [a, b] : arrows_) d.add_arrow(a, b);
  return d;
}

int Orientation::out_degree(int v) const {
  int k = 0;
  for (auto [a, b] : arrows_) k += (a == v);
  return k;
}

int Orientation::in_degree(int v) const {
  int k = 0;
  for (auto [a, b] : arrows_) k += (b == v);
  return k;
}

std::vector<int> Orientation::sinks() const {
  std::vector<int> out;
  for (int v = 0; v < g_.vertex_count(); ++v)
    if (out_degree(v) == 0) out.push_back(v);
  return out;
}

std::vector<int> Orientation::sources() const {
  std::vector<int> out;
  for (int v = 0; v < g_.vertex_count(); ++v)
    if (in_degree(v) == 0) out.push_back(v);
  return out;
}

bool Orientation::is_acyclic() const { return cyclecover::is_acyclic(as_digraph()); }

Orientation Orientation::flipped(int v) const {
  check_vertex(g_.vertex_count(), v);
  auto arrows = arrows_;
  for (auto& [a, b] : arrows)
    if (a == v || b == v) std::swap(a, b);
  return Orientation(g_, arrows);
}

Digraph complement(const Digraph& d) {
  int n = d.vertex_count();
  Digraph out(n);
  VertexSet full = full_vertex_set(n);
  for (int v = 0; v < n; ++v)
    for (int w : set_to_vertices(full & ~d.out_row(v))) out.add_arrow(v, w);
  return out;
}

Digraph restrict_to(const Digraph& d, VertexSet s) {
  if ((s & ~full_vertex_set(d.vertex_count())) != 0)
    throw DomainError("subset contains an out-of-range vertex");
  std::vector<int> verts = set_to_vertices(s);
  Digraph out(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = 0; j < verts.size(); ++j)
      if (d.has_arrow(verts[i], verts[j])) out.add_arrow(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph restrict_to(const Graph& g, VertexSet s) {
  if ((s & ~full_vertex_set(g.vertex_count())) != 0)
    throw DomainError("subset contains an out-of-range vertex");
  std::vector<int> verts = set_to_vertices(s);
  Graph out(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Digraph contract_arrow(const Digraph& d, int v, int w) {
  int n = d.vertex_count();
  check_vertex(n, v);
  check_vertex(n, w);
  if (v == w) throw DomainError("cannot contract a loop");
  int merged = std::min(v, w);
  int removed = std::max(v, w);
  auto relabel = [&](int x) { return x > removed ? x - 1 : x; };
  Digraph out(n - 1);
  for (auto [a, b] : d.arrows()) {
    if (a == v || b == w) continue;  // out-arrows of v and in-arrows of w die
    int a2 = (a == w) ? merged : a;
    int b2 = (b == v) ? merged : b;
    out.add_arrow(relabel(a2), relabel(b2));
  }
  return out;
}

Digraph contract_path_cover(const Digraph& d, const PathCover& cover) {
  if (!is_path_cover_of(d, cover)) throw DomainError("not a path cover of the digraph");
  int m = cover.path_count();
  Digraph out(m);
  const auto& paths = cover.paths();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (d.has_arrow(paths[i].back(), paths[j].front())) out.add_arrow(i, j);
  return out;
}

bool is_acyclic(const Digraph& d) {
  // Kahn's peeling; a loop keeps its vertex's in-degree positive, so loops
  // count as cycles.
  int n = d.vertex_count();
  std::vector<int> indeg(n, 0);
  for (auto [v, w] : d.arrows()) ++indeg[w];
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int removed = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int w : set_to_vertices(d.out_row(v)))
      if (--indeg[w] == 0) stack.push_back(w);
  }
  return removed == n;
}

std::vector<int> topological_order(const Digraph& d) {
  int n = d.vertex_count();
  std::vector<int> indeg(n, 0);
  for (auto [v, w] : d.arrows()) ++indeg[w];
  std::vector<bool> used(n, false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!used[v] && indeg[v] == 0) { pick = v; break; }
    if (pick < 0) throw DomainError("digraph is not acyclic");
    used[pick] = true;
    order.push_back(pick);
    for (int w : set_to_vertices(d.out_row(pick))) --indeg[w];
  }
  return order;
}

Graph incomparability_graph(const Poset& p) {
  int n = p.vertex_count();
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!p.comparable(u, v)) g.add_edge(u, v);
  return g;
}

Int adjacency_determinant(const Digraph& d) {
  // Bareiss fraction-free elimination with row pivoting; all divisions exact.
  int n = d.vertex_count();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = d.has_arrow(i, j) ? 1 : 0;
  Int sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { r = i; break; }
      if (r < 0) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_path_of(const Digraph& d, const std::vector<int>& path) {
  for (int v : path)
    if (v < 0 || v >= d.vertex_count()) return false;
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (!d.has_arrow(path[i], path[i + 1])) return false;
  return true;
}

bool is_hamiltonian_path_of(const Digraph& d, const std::vector<int>& path) {
  int n = d.vertex_count();
  if (static_cast<int>(path.size()) != n) return false;
  VertexSet seen = 0;
  for (int v : path) {
    if (v < 0 || v >= n || ((seen >> v) & 1)) return false;
    seen |= VertexSet(1) << v;
  }
  return is_path_of(d, path);
}

bool is_path_cover_of(const Digraph& d, const PathCover& cover) {
  if (cover.vertex_count() != d.vertex_count()) return false;
  // PathCover's own invariant already guarantees disjointness/coverage.
  for (const auto& p : cover.paths())
    if (!is_path_of(d, p)) return false;
  return true;
}

bool is_cycle_cover_of(const Digraph& d, const CycleCover& cover) {
  if (cover.weight() != d.vertex_count()) return false;
  for (const auto& c : cover.cycles()) {
    if (!is_path_of(d, c)) return false;
    if (!d.has_arrow(c.back(), c.front())) return false;
  }
  return true;
}

}  // namespace cyclecover
