#include "cyclecover/symfunc.hpp"

#include <memory>
#include <mutex>
#include <vector>

#include "cyclecover/enumerate.hpp"
#include "cyclecover/errors.hpp"

namespace cyclecover {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::kPower: return "p";
    case Basis::kElementary: return "e";
    case Basis::kHomogeneous: return "h";
    case Basis::kAugmentedMonomial: return "mt";
    case Basis::kMonomial: return "m";
  }
  throw DomainError("unknown basis");
}

Basis basis_from_name(const std::string& s) {
  if (s == "p") return Basis::kPower;
  if (s == "e") return Basis::kElementary;
  if (s == "h") return Basis::kHomogeneous;
  if (s == "mt") return Basis::kAugmentedMonomial;
  if (s == "m") return Basis::kMonomial;
  throw ParseError("unknown basis name: " + s);
}

namespace {

using PMap = std::map<Partition, Rational>;
using Matrix = std::vector<std::vector<Rational>>;

PMap multiply(const PMap& a, const PMap& b) {
  PMap out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) {
      Rational c = ca * cb;
      if (c != 0) {
        Rational& slot = out[merge_partitions(la, lb)];
        slot += c;
        // leave exact zeros in place; rows are read densely anyway
      }
    }
  return out;
}

Matrix invert(const Matrix& m) {
  size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw DomainError("transition matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational scale = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

struct BasisTables {
  std::vector<Partition> partitions;
  std::map<Partition, int> index;
  // X2P[i][j] = coefficient of p_{partitions[j]} in X_{partitions[i]};
  // P2X is its matrix inverse (p written in the X basis).
  Matrix E2P, P2E, H2P, P2H, MT2P, P2MT;
};

// Newton: k*e_k = sum_{i=1..k} (-1)^(i-1) p_i e_{k-i}, and the all-plus
// analogue for h.  Returns p-expansions of e_0..e_n (or h_0..h_n).
std::vector<PMap> single_part_expansions(int n, bool elementary) {
  std::vector<PMap> exp(n + 1);
  exp[0][Partition()] = 1;
  for (int k = 1; k <= n; ++k) {
    PMap acc;
    for (int i = 1; i <= k; ++i) {
      Rational sign = (!elementary || i % 2 == 1) ? 1 : -1;
      for (const auto& [lam, c] : exp[k - i]) {
        Rational term = c * sign / k;
        if (term != 0) acc[merge_partitions(Partition::single(i), lam)] += term;
      }
    }
    exp[k] = std::move(acc);
  }
  return exp;
}

std::unique_ptr<BasisTables> build_tables(int n) {
  auto t = std::make_unique<BasisTables>();
  t->partitions = all_partitions(n);
  int count = static_cast<int>(t->partitions.size());
  for (int i = 0; i < count; ++i) t->index[t->partitions[i]] = i;

  auto dense_row = [&](const PMap& f) {
    std::vector<Rational> row(count, 0);
    for (const auto& [lam, c] : f) row[t->index.at(lam)] += c;
    return row;
  };

  auto e1 = single_part_expansions(n, true);
  auto h1 = single_part_expansions(n, false);
  t->E2P.resize(count);
  t->H2P.resize(count);
  for (int i = 0; i < count; ++i) {
    PMap fe, fh;
    fe[Partition()] = 1;
    fh[Partition()] = 1;
    for (int part : t->partitions[i].parts()) {
      fe = multiply(fe, e1[part]);
      fh = multiply(fh, h1[part]);
    }
    t->E2P[i] = dense_row(fe);
    t->H2P[i] = dense_row(fh);
  }

  // p_lambda = sum over coarsenings gamma of a fixed type-lambda set
  // partition of mt_{t(gamma)}.
  t->MT2P.resize(count);
  t->P2MT.assign(count, std::vector<Rational>(count, 0));
  for (int i = 0; i < count; ++i) {
    std::vector<std::uint32_t> blocks;
    int offset = 0;
    for (int part : t->partitions[i].parts()) {
      blocks.push_back(((std::uint32_t(1) << part) - 1) << offset);
      offset += part;
    }
    for (const SetPartition& gamma : coarsenings(SetPartition{blocks}))
      t->P2MT[i][t->index.at(gamma.type())] += 1;
  }
  t->MT2P = invert(t->P2MT);
  t->P2E = invert(t->E2P);
  t->P2H = invert(t->H2P);
  return t;
}

const BasisTables& tables(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BasisTables>> cache;
  std::scoped_lock lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_tables(n);
  return *slot;
}

Rational multiplicity_factorial(const Partition& lambda) {
  Rational f = 1;
  for (auto& [part, mult] : lambda.multiplicities()) f *= Rational(factorial(mult));
  return f;
}

}  // namespace

SymFunc::SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {
  if (degree < 0) throw DomainError("symmetric function degree must be nonnegative");
}

SymFunc SymFunc::single(Basis basis, const Partition& lambda, const Rational& coeff) {
  SymFunc f(lambda.sum(), basis);
  f.add_term(lambda, coeff);
  return f;
}

void SymFunc::add_term(const Partition& lambda, const Rational& coeff) {
  if (lambda.sum() != degree_)
    throw DomainError("partition does not match the symmetric function degree");
  Rational& slot = terms_[lambda];
  slot += coeff;
  if (slot == 0) terms_.erase(lambda);
}

Rational SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational SymFunc::coefficient(const Partition& lambda, Basis b) const {
  if (b == basis_) return coefficient(lambda);
  return in_basis(b).coefficient(lambda);
}

SymFunc SymFunc::in_basis(Basis target) const {
  if (target == basis_) return *this;
  const BasisTables& t = tables(degree_);
  int count = static_cast<int>(t.partitions.size());

  // First express in p coordinates.
  std::vector<Rational> p(count, 0);
  auto accumulate_rows = [&](const Matrix& x2p) {
    for (const auto& [lam, c] : terms_) {
      const auto& row = x2p[t.index.at(lam)];
      for (int j = 0; j < count; ++j)
        if (row[j] != 0) p[j] += c * row[j];
    }
  };
  switch (basis_) {
    case Basis::kPower:
      for (const auto& [lam, c] : terms_) p[t.index.at(lam)] = c;
      break;
    case Basis::kElementary: accumulate_rows(t.E2P); break;
    case Basis::kHomogeneous: accumulate_rows(t.H2P); break;
    case Basis::kAugmentedMonomial: accumulate_rows(t.MT2P); break;
    case Basis::kMonomial: {
      // m_lambda = mt_lambda / prod r_i!, then through MT2P.
      for (const auto& [lam, c] : terms_) {
        const auto& row = t.MT2P[t.index.at(lam)];
        Rational scaled = c / multiplicity_factorial(lam);
        for (int j = 0; j < count; ++j)
          if (row[j] != 0) p[j] += scaled * row[j];
      }
      break;
    }
  }

  // Then re-express p coordinates in the target basis.
  SymFunc out(degree_, target);
  auto emit_via = [&](const Matrix& p2x, bool monomial_scale) {
    for (int j = 0; j < count; ++j) {
      if (p[j] == 0) continue;
      const auto& row = p2x[j];
      for (int i = 0; i < count; ++i) {
        if (row[i] == 0) continue;
        Rational c = p[j] * row[i];
        if (monomial_scale) c *= multiplicity_factorial(t.partitions[i]);
        out.add_term(t.partitions[i], c);
      }
    }
  };
  switch (target) {
    case Basis::kPower:
      for (int j = 0; j < count; ++j)
        if (p[j] != 0) out.add_term(t.partitions[j], p[j]);
      break;
    case Basis::kElementary: emit_via(t.P2E, false); break;
    case Basis::kHomogeneous: emit_via(t.P2H, false); break;
    case Basis::kAugmentedMonomial: emit_via(t.P2MT, false); break;
    case Basis::kMonomial: emit_via(t.P2MT, true); break;
  }
  return out;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.degree_ != b.degree_) return false;
  return a.in_basis(Basis::kPower).terms_ == b.in_basis(Basis::kPower).terms_;
}

SymFunc omega(const SymFunc& f) {
  SymFunc p = f.in_basis(Basis::kPower);
  SymFunc out(f.degree(), Basis::kPower);
  for (const auto& [lam, c] : p.terms()) {
    Rational sign = ((lam.sum() - lam.length()) % 2 == 0) ? 1 : -1;
    out.add_term(lam, c * sign);
  }
  return out;
}

bool is_e_positive(const SymFunc& f) {
  SymFunc e = f.in_basis(Basis::kElementary);
  for (const auto& [lam, c] : e.terms())
    if (c < 0) return false;
  return true;
}

SymFunc power_sum(const Partition& lambda) {
  return SymFunc::single(Basis::kPower, lambda);
}

namespace {

void assert_integral(const SymFunc& f, const char* what) {
  for (const auto& [lam, c] : f.terms())
    if (boost::multiprecision::denominator(c) != 1)
      throw std::logic_error(std::string(what) + " produced a non-integral coefficient");
}

}  // namespace

SymFunc pi_symfunc(const Digraph& d) {
  SymFunc f(d.vertex_count(), Basis::kAugmentedMonomial);
  if (d.vertex_count() == 0) throw DomainError("digraph must have at least one vertex");
  for (const PathCover& e : path_covers(d)) f.add_term(e.type(), 1);
  assert_integral(f, "pi_symfunc");
  return f;
}

SymFunc z_symfunc(const Digraph& d) {
  SymFunc f(d.vertex_count(), Basis::kPower);
  if (d.vertex_count() == 0) throw DomainError("digraph must have at least one vertex");
  for (const CycleCover& c : cycle_covers(d)) f.add_term(c.type(), 1);
  assert_integral(f, "z_symfunc");
  return f;
}

SymFunc chromatic_symfunc(const Graph& g) {
  if (g.vertex_count() == 0) throw DomainError("graph must have at least one vertex");
  SymFunc f(g.vertex_count(), Basis::kAugmentedMonomial);
  for (const SetPartition& sp : set_partitions(g.vertex_count())) {
    bool stable = true;
    for (std::uint32_t b : sp.blocks) {
      for (int v : set_to_vertices(b))
        if ((g.neighbors(v) & b) != 0) {
          stable = false;
          break;
        }
      if (!stable) break;
    }
    if (stable) f.add_term(sp.type(), 1);
  }
  assert_integral(f, "chromatic_symfunc");
  return f;
}

SymFunc p_to_e_via_tau(const Partition& lambda) {
  int n = lambda.sum();
  SymFunc f(n, Basis::kElementary);
  Rational global = (n % 2 == 0) ? 1 : -1;
  for (const auto& [mu, c] : c_coefficients(lambda)) {
    Rational sign = (mu.length() % 2 == 0) ? 1 : -1;
    f.add_term(mu, global * sign * Rational(c));
  }
  return f;
}

Int z_e_coefficient_direct(const Digraph& d, const Partition& lambda) {
  Int total = 0;
  for (const PathCover& e : path_covers(d, lambda))
    total += static_cast<Int>(cycle_covers(contract_path_cover(d, e)).size());
  return total;
}

Int z_h_coefficient_direct(const Digraph& d, const Partition& lambda) {
  Int total = 0;
  for (const PathCover& e : path_covers(d, lambda))
    total += adjacency_determinant(contract_path_cover(d, e));
  return total;
}

Int inc_e_coefficient(const Poset& p, const Partition& lambda) {
  return z_h_coefficient_direct(complement(p.digraph()), lambda);
}

Int chromatic_polynomial_eval(const Graph& g, int k) {
  SymFunc x = chromatic_symfunc(g).in_basis(Basis::kPower);
  Rational total = 0;
  for (const auto& [lam, c] : x.terms()) {
    Rational power = 1;
    for (int i = 0; i < lam.length(); ++i) power *= k;
    total += c * power;
  }
  if (boost::multiprecision::denominator(total) != 1)
    throw std::logic_error("chromatic polynomial evaluation must be integral");
  return boost::multiprecision::numerator(total);
}

Int pi_via_berge_lass(const Digraph& h) {
  int n = h.vertex_count();
  if (n == 0) throw DomainError("digraph must have at least one vertex");
  Digraph hbar = complement(h);
  VertexSet full = full_vertex_set(n);
  std::vector<Int> z(full + 1, 0), zbar(full + 1, 0);
  for (VertexSet s = 1; s <= full; ++s) {
    z[s] = count_hamiltonian_cycles(restrict_to(h, s));
    zbar[s] = count_hamiltonian_cycles(restrict_to(hbar, s));
  }
  Int total = 0;
  for (const SetPartition& sigma : set_partitions(n)) {
    Int prod = 1;
    for (std::uint32_t t : sigma.blocks) {
      Int factor = z[t] - ((std::popcount(t) % 2 == 0) ? zbar[t] : -zbar[t]);
      prod *= factor;
      if (prod == 0) break;
    }
    total += prod;
  }
  return total;
}

}  // namespace cyclecover
