#include "cyclecover/setmap.hpp"

#include <algorithm>
#include <bit>

#include "cyclecover/enumerate.hpp"
#include "cyclecover/errors.hpp"
#include "cyclecover/symfunc.hpp"

namespace cyclecover {

SetMap::SetMap(int ground) : ground_(ground) {
  if (ground < 0 || ground > kMaxSetMapGround)
    throw DomainError("set map ground size must be between 0 and " +
                      std::to_string(kMaxSetMapGround));
  values_.assign(std::size_t(1) << ground, 0);
}

SetMap SetMap::identity(int ground) {
  SetMap e(ground);
  e.set_value(0, 1);
  return e;
}

const Rational& SetMap::value(std::uint32_t subset) const {
  if (subset >= values_.size()) throw DomainError("subset outside the ground set");
  return values_[subset];
}

void SetMap::set_value(std::uint32_t subset, const Rational& v) {
  if (subset >= values_.size()) throw DomainError("subset outside the ground set");
  values_[subset] = v;
}

SetMap setmap_multiply(const SetMap& h, const SetMap& g) {
  if (h.ground() != g.ground()) throw DomainError("set maps live on different ground sets");
  SetMap out(h.ground());
  std::uint32_t full = (std::uint32_t(1) << h.ground()) - 1;
  for (std::uint32_t u = 0;; ++u) {
    Rational total = 0;
    // All submasks s of u, including 0 and u itself.
    std::uint32_t s = u;
    while (true) {
      total += h.value(s) * g.value(u & ~s);
      if (s == 0) break;
      s = (s - 1) & u;
    }
    out.set_value(u, total);
    if (u == full) break;
  }
  return out;
}

SetMap setmap_inverse(const SetMap& h) {
  if (h.value(0) == 0) throw DomainError("set map is not invertible (empty-set value is zero)");
  SetMap g(h.ground());
  std::uint32_t full = (std::uint32_t(1) << h.ground()) - 1;
  g.set_value(0, Rational(1) / h.value(0));
  // Ascending masks: every proper subset of u is numerically smaller.
  for (std::uint32_t u = 1; u <= full; ++u) {
    Rational total = 0;
    std::uint32_t s = u;
    while (s != 0) {
      total += h.value(s) * g.value(u & ~s);
      s = (s - 1) & u;
    }
    g.set_value(u, -total / h.value(0));
  }
  return g;
}

namespace {

Int restricted_path_count(const Digraph& d, VertexSet s) {
  if (s == 0) return 1;  // the empty path
  return count_hamiltonian_paths(restrict_to(d, s));
}

// Hamiltonian paths of d restricted to s, in original labels.
std::vector<std::vector<int>> restricted_paths(const Digraph& d, VertexSet s) {
  if (s == 0) return {{}};
  std::vector<int> verts = set_to_vertices(s);
  std::vector<std::vector<int>> out;
  for (auto& p : hamiltonian_paths(restrict_to(d, s))) {
    for (int& v : p) v = verts[v];
    out.push_back(std::move(p));
  }
  return out;
}

void validate_pair(const Digraph& d, const PathPair& pair, const Digraph& dbar) {
  int n = d.vertex_count();
  VertexSet seen = 0;
  for (const auto* path : {&pair.host_path, &pair.complement_path})
    for (int v : *path) {
      if (v < 0 || v >= n || ((seen >> v) & 1))
        throw DomainError("path pair does not split the vertex set");
      seen |= VertexSet(1) << v;
    }
  if (seen != full_vertex_set(n)) throw DomainError("path pair does not split the vertex set");
  if (!is_path_of(d, pair.host_path))
    throw DomainError("host path is not a path of the digraph");
  if (!is_path_of(dbar, pair.complement_path))
    throw DomainError("complement path is not a path of the complement");
}

}  // namespace

SetMap path_setmap(const Digraph& d) {
  int n = d.vertex_count();
  if (n > kMaxSetMapGround) throw DomainError("digraph too large for a set map");
  SetMap h(n);
  for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s)
    h.set_value(s, Rational(restricted_path_count(d, s)));
  return h;
}

PathPair pathsum_involution(const Digraph& d, const PathPair& pair) {
  if (d.vertex_count() == 0) throw DomainError("digraph must have at least one vertex");
  Digraph dbar = complement(d);
  validate_pair(d, pair, dbar);
  PathPair out = pair;
  auto& e = out.host_path;
  auto& f = out.complement_path;
  if (f.empty()) {
    // Move the last host vertex over; a one-vertex path is always valid.
    f.insert(f.begin(), e.back());
    e.pop_back();
  } else if (e.empty()) {
    e.push_back(f.front());
    f.erase(f.begin());
  } else if (d.has_arrow(e.back(), f.front())) {
    e.push_back(f.front());
    f.erase(f.begin());
  } else {
    f.insert(f.begin(), e.back());
    e.pop_back();
  }
  validate_pair(d, out, dbar);
  return out;
}

Int pathsum_signed_sum(const Digraph& d) {
  int n = d.vertex_count();
  if (n == 0) throw DomainError("digraph must have at least one vertex");
  Digraph dbar = complement(d);
  VertexSet full = full_vertex_set(n);
  Int total = 0;
  for (VertexSet s = 0;; ++s) {
    VertexSet t = full & ~s;
    Int term = restricted_path_count(d, s) * restricted_path_count(dbar, t);
    total += (std::popcount(t) % 2 == 0) ? term : -term;
    if (s == full) break;
  }
  return total;
}

std::vector<PathPair> all_path_pairs(const Digraph& d) {
  int n = d.vertex_count();
  if (n == 0) throw DomainError("digraph must have at least one vertex");
  Digraph dbar = complement(d);
  VertexSet full = full_vertex_set(n);
  std::vector<PathPair> out;
  for (VertexSet s = 0;; ++s) {
    for (const auto& e : restricted_paths(d, s))
      for (const auto& f : restricted_paths(dbar, full & ~s))
        out.push_back(PathPair{e, f});
    if (s == full) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool lass_reciprocity_check(const SetMap& h, std::uint32_t s) {
  if (s == 0) throw DomainError("subset must be nonempty");
  if (s >= (std::uint32_t(1) << h.ground())) throw DomainError("subset outside the ground set");
  SetMap hinv = setmap_inverse(h);  // rejects non-invertible h

  auto assemble = [&](const SetMap& map) {
    int degree = std::popcount(s);
    SymFunc f(degree, Basis::kAugmentedMonomial);
    for (const SetPartition& sigma : set_partitions_of_mask(s)) {
      Rational prod = 1;
      for (std::uint32_t block : sigma.blocks) prod *= map.value(block);
      f.add_term(sigma.type(), prod);
    }
    return f;
  };

  SymFunc lhs = omega(assemble(h));
  SymFunc rhs = assemble(hinv);
  SymFunc signed_rhs(rhs.degree(), rhs.basis());
  Rational sign = (std::popcount(s) % 2 == 0) ? 1 : -1;
  for (const auto& [lam, c] : rhs.terms()) signed_rhs.add_term(lam, c * sign);
  return lhs == signed_rhs;
}

}  // namespace cyclecover
