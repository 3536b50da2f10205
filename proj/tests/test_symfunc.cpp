#include <map>
#include <random>
#include <vector>

#include "doctest.h"

#include "cyclecover/census.hpp"
#include "cyclecover/enumerate.hpp"
#include "cyclecover/errors.hpp"
#include "cyclecover/symfunc.hpp"

using namespace cyclecover;

namespace {

const Basis kAllBases[] = {Basis::kPower, Basis::kElementary, Basis::kHomogeneous,
                           Basis::kAugmentedMonomial, Basis::kMonomial};

// Coefficient of m_lambda in X_g: proper colorings using exactly the colors
// 0..l-1 with color class sizes lambda, in that order.
long long monomial_coloring_count(const Graph& g, const Partition& lambda) {
  int n = g.vertex_count();
  int colors = lambda.length();
  std::vector<int> c(n, 0);
  long long count = 0;
  while (true) {
    bool proper = true;
    for (auto [u, v] : g.edges())
      if (c[u] == c[v]) proper = false;
    if (proper) {
      std::vector<int> sizes(colors, 0);
      for (int v = 0; v < n; ++v) ++sizes[c[v]];
      bool match = true;
      for (int i = 0; i < colors; ++i)
        if (sizes[i] != lambda.parts()[i]) match = false;
      if (match) ++count;
    }
    int i = 0;
    while (i < n && c[i] == colors - 1) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
  return count;
}

long long proper_coloring_count(const Graph& g, int k) {
  if (k == 0) return g.vertex_count() == 0 ? 1 : 0;
  int n = g.vertex_count();
  std::vector<int> c(n, 0);
  long long count = 0;
  while (true) {
    bool proper = true;
    for (auto [u, v] : g.edges())
      if (c[u] == c[v]) proper = false;
    if (proper) ++count;
    int i = 0;
    while (i < n && c[i] == k - 1) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
  return count;
}

}  // namespace

TEST_CASE("partitions") {
  Partition lambda({1, 3, 2, 3});
  CHECK(lambda.parts() == std::vector<int>{3, 3, 2, 1});
  CHECK(lambda.sum() == 9);
  CHECK(lambda.length() == 4);
  CHECK(lambda.to_string() == "3,3,2,1");
  CHECK(lambda.multiplicities() == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}});
  CHECK(Partition::single(4) == Partition({4}));
  CHECK(Partition::ones(3) == Partition({1, 1, 1}));
  CHECK(merge_partitions(Partition({2, 1}), Partition({3})) == Partition({3, 2, 1}));
  CHECK_THROWS_AS(Partition({0}), DomainError);
  CHECK_THROWS_AS(Partition({-2, 1}), DomainError);

  const size_t partition_counts[] = {1, 1, 2, 3, 5, 7, 11};
  for (int n = 0; n <= 6; ++n) CHECK(all_partitions(n).size() == partition_counts[n]);
}

TEST_CASE("frozen conversion identities") {
  SymFunc p2 = power_sum(Partition({2}));
  SymFunc p2e = p2.in_basis(Basis::kElementary);
  CHECK(p2e.coefficient(Partition({1, 1})) == 1);
  CHECK(p2e.coefficient(Partition({2})) == -2);

  SymFunc p3e = power_sum(Partition({3})).in_basis(Basis::kElementary);
  CHECK(p3e.coefficient(Partition({1, 1, 1})) == 1);
  CHECK(p3e.coefficient(Partition({2, 1})) == -3);
  CHECK(p3e.coefficient(Partition({3})) == 3);

  // p2 in h: p2 = 2h2 - h11.
  SymFunc p2h = p2.in_basis(Basis::kHomogeneous);
  CHECK(p2h.coefficient(Partition({2})) == 2);
  CHECK(p2h.coefficient(Partition({1, 1})) == -1);

  // Augmented monomials carry the multiplicity factorials.
  for (int n = 1; n <= 5; ++n) {
    SymFunc mt = SymFunc::single(Basis::kAugmentedMonomial, Partition::ones(n));
    Rational fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(mt.in_basis(Basis::kMonomial).coefficient(Partition::ones(n)) == fact);
  }

  // e_n expands in p with coefficients summing over sign classes; spot check
  // e_2 = (p11 - p2)/2.
  SymFunc e2 = SymFunc::single(Basis::kElementary, Partition({2})).in_basis(Basis::kPower);
  CHECK(e2.coefficient(Partition({1, 1})) == Rational(1, 2));
  CHECK(e2.coefficient(Partition({2})) == Rational(-1, 2));
}

TEST_CASE("conversion round trips on random inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int degree = 1 + static_cast<int>(rng() % 5);
    Basis from = kAllBases[rng() % 5];
    SymFunc f(degree, from);
    for (const Partition& lambda : all_partitions(degree))
      f.add_term(lambda, Rational(static_cast<long long>(rng() % 9) - 4));
    for (Basis via : kAllBases) {
      SymFunc back = f.in_basis(via).in_basis(from);
      CHECK(back == f);
      CHECK(back.terms() == f.terms());  // sparse maps match exactly
    }
  }
}

TEST_CASE("omega") {
  // Diagonal sign action on power sums.
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lambda : all_partitions(n)) {
      SymFunc w = omega(power_sum(lambda));
      int sign = ((n - lambda.length()) % 2) ? -1 : 1;
      CHECK(w.coefficient(lambda) == Rational(sign));
      CHECK(w.terms().size() == 1);
      // omega exchanges the e and h bases termwise.
      SymFunc we = omega(SymFunc::single(Basis::kElementary, lambda));
      CHECK(we.in_basis(Basis::kHomogeneous).coefficient(lambda) == 1);
      CHECK(we.in_basis(Basis::kHomogeneous).terms().size() == 1);
    }

  CHECK(omega(power_sum(Partition::ones(4))) == power_sum(Partition::ones(4)));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int degree = 1 + static_cast<int>(rng() % 5);
    SymFunc f(degree, kAllBases[rng() % 5]);
    for (const Partition& lambda : all_partitions(degree))
      f.add_term(lambda, Rational(static_cast<long long>(rng() % 7) - 3));
    CHECK(omega(omega(f)) == f);
  }
}

TEST_CASE("path cover and cycle cover sums match their defining assemblies") {
  for (int n = 1; n <= 3; ++n)
    for (const Digraph& d : all_digraphs(n)) {
      SymFunc pi(n, Basis::kAugmentedMonomial);
      for (const PathCover& e : path_covers(d)) pi.add_term(e.type(), 1);
      CHECK(pi_symfunc(d) == pi);

      SymFunc z(n, Basis::kPower);
      for (const CycleCover& f : cycle_covers(d)) z.add_term(f.type(), 1);
      CHECK(z_symfunc(d) == z);
    }

  CHECK(pi_symfunc(Digraph(1)) ==
        SymFunc::single(Basis::kAugmentedMonomial, Partition({1})));
  CHECK(pi_symfunc(Digraph(3)) ==
        SymFunc::single(Basis::kAugmentedMonomial, Partition::ones(3)));
  CHECK(z_symfunc(Digraph(1)).is_zero());
  CHECK(z_symfunc(complement(Digraph(2))).coefficient(Partition::ones(2)) == 1);
}

TEST_CASE("chromatic symmetric function examples") {
  Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  SymFunc xk3 = chromatic_symfunc(k3).in_basis(Basis::kElementary);
  CHECK(xk3.coefficient(Partition({3})) == 6);
  CHECK(xk3.terms().size() == 1);
  CHECK(is_e_positive(chromatic_symfunc(k3)));

  SymFunc xempty = chromatic_symfunc(Graph(3)).in_basis(Basis::kPower);
  CHECK(xempty.coefficient(Partition::ones(3)) == 1);
  CHECK(xempty.terms().size() == 1);

  Graph p3(3, {{0, 1}, {1, 2}});
  SymFunc xp3 = chromatic_symfunc(p3).in_basis(Basis::kElementary);
  CHECK(xp3.coefficient(Partition({2, 1})) == 1);
  CHECK(xp3.coefficient(Partition({3})) == 3);
  CHECK(xp3.terms().size() == 2);

  // The 4-star is the smallest graph whose expansion goes e-negative.
  Graph claw(4, {{0, 1}, {0, 2}, {0, 3}});
  SymFunc xclaw = chromatic_symfunc(claw).in_basis(Basis::kElementary);
  CHECK(xclaw.coefficient(Partition({2, 2})) == -2);
  CHECK(xclaw.coefficient(Partition({3, 1})) == 5);
  CHECK(xclaw.coefficient(Partition({4})) == 4);
  CHECK(xclaw.coefficient(Partition({2, 1, 1})) == 1);
  CHECK_FALSE(is_e_positive(xclaw));
}

TEST_CASE("chromatic function agrees with the coloring oracle in the m basis") {
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : all_graphs(n)) {
      SymFunc x = chromatic_symfunc(g).in_basis(Basis::kMonomial);
      for (const Partition& lambda : all_partitions(n))
        CHECK(x.coefficient(lambda) == Rational(monomial_coloring_count(g, lambda)));
    }
}

TEST_CASE("chromatic polynomial specialization counts colorings") {
  Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(chromatic_polynomial_eval(k3, 3) == 6);
  CHECK(chromatic_polynomial_eval(k3, 2) == 0);
  CHECK(chromatic_polynomial_eval(Graph(3), 5) == 125);
  for (int n = 1; n <= 3; ++n)
    for (const Graph& g : all_graphs(n))
      for (int k = 0; k <= 3; ++k)
        CHECK(chromatic_polynomial_eval(g, k) == Int(proper_coloring_count(g, k)));
}

TEST_CASE("power sum expansion via cycle-union subsets matches conversion") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lambda : all_partitions(n))
      CHECK(p_to_e_via_tau(lambda) == power_sum(lambda).in_basis(Basis::kElementary));
}

TEST_CASE("cycle sum coefficient formulas on a 2-cycle") {
  Digraph two_cycle(2, {{0, 1}, {1, 0}});
  SymFunc z = z_symfunc(two_cycle);
  CHECK(z == power_sum(Partition({2})));

  // Both orientations of the single Hamiltonian path close up into the cycle;
  // the singleton cover contracts to the 2-cycle itself, giving one (E,F) pair.
  CHECK(z_e_coefficient_direct(two_cycle, Partition({2})) == 2);
  CHECK(z_e_coefficient_direct(two_cycle, Partition({1, 1})) == 1);
  // Each contraction of a 2-path carries a loop: determinant 1.
  CHECK(z_h_coefficient_direct(two_cycle, Partition({2})) == 2);
  CHECK(z_h_coefficient_direct(two_cycle, Partition({1, 1})) == -1);

  CHECK(z_e_coefficient_direct(Digraph(2), Partition({2})) == 0);
  CHECK(z_e_coefficient_direct(Digraph(2), Partition({1, 1})) == 0);
  CHECK_THROWS_AS(z_e_coefficient_direct(two_cycle, Partition({3})), DomainError);
  CHECK_THROWS_AS(z_h_coefficient_direct(two_cycle, Partition({1})), DomainError);
}

TEST_CASE("incomparability e-coefficients") {
  Poset chain = Poset::from_relations_closure(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(inc_e_coefficient(chain, Partition::ones(4)) == 1);
  CHECK(inc_e_coefficient(chain, Partition({4})) == 0);

  Poset antichain(3, {});
  CHECK(inc_e_coefficient(antichain, Partition({3})) == 6);
  CHECK(inc_e_coefficient(antichain, Partition({2, 1})) == 0);
  CHECK_THROWS_AS(inc_e_coefficient(antichain, Partition({2})), DomainError);
}

TEST_CASE("hamiltonian path count via the cycle-count partition sum") {
  for (int n = 1; n <= 3; ++n)
    for (const Digraph& d : all_digraphs(n))
      CHECK(pi_via_berge_lass(d) == count_hamiltonian_paths(d));
  Digraph fig(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  CHECK(pi_via_berge_lass(complement(fig)) == 7);
}

TEST_CASE("omega swaps a path cover sum with its complement's") {
  Digraph d(3, {{0, 1}, {2, 2}});
  CHECK(omega(pi_symfunc(d)) == pi_symfunc(complement(d)));
  Digraph fig(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  CHECK(omega(pi_symfunc(fig)) == pi_symfunc(complement(fig)));
}
