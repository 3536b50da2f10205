#pragma once

#include <map>
#include <string>

#include "cyclecover/graphs.hpp"
#include "cyclecover/numeric.hpp"
#include "cyclecover/partition.hpp"

namespace cyclecover {

// Bases for homogeneous symmetric functions of a fixed degree:
// power sum (p), elementary (e), complete homogeneous (h), augmented
// monomial (mt, with mt_lambda = prod_i r_i! * m_lambda), monomial (m).
enum class Basis { kPower, kElementary, kHomogeneous, kAugmentedMonomial, kMonomial };

std::string basis_name(Basis b);              // "p", "e", "h", "mt", "m"
Basis basis_from_name(const std::string& s);  // ParseError on anything else

// A homogeneous symmetric function of fixed degree, stored as exact rational
// coefficients on partitions in one declared basis.  Conversions between
// bases go through the power-sum basis and are exact; transition tables are
// computed once per degree and cached.
class SymFunc {
 public:
  SymFunc() = default;
  SymFunc(int degree, Basis basis);
  static SymFunc single(Basis basis, const Partition& lambda, const Rational& coeff = 1);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& lambda, const Rational& coeff);  // zero terms vanish

  // Coefficient in the stored basis, or in any other basis (converting
  // transparently; the stored representation is untouched).
  Rational coefficient(const Partition& lambda) const;
  Rational coefficient(const Partition& lambda, Basis b) const;

  SymFunc in_basis(Basis target) const;

  // Exact equality as symmetric functions (compared in the power-sum basis);
  // degrees must match.
  friend bool operator==(const SymFunc& a, const SymFunc& b);

 private:
  int degree_ = 0;
  Basis basis_ = Basis::kPower;
  std::map<Partition, Rational> terms_;
};

// The involution omega; diagonal in the power-sum basis, where it scales
// p_lambda by (-1)^(|lambda| - l(lambda)).  Result is in the power-sum basis.
SymFunc omega(const SymFunc& f);

bool is_e_positive(const SymFunc& f);

SymFunc power_sum(const Partition& lambda);  // p_lambda

// Sum of augmented monomials over all path covers of d, by type.
SymFunc pi_symfunc(const Digraph& d);
// Sum of power sums over all cycle covers of d, by type.
SymFunc z_symfunc(const Digraph& d);
// Chromatic symmetric function: sum of augmented monomials over stable set
// partitions of the graph, by type.
SymFunc chromatic_symfunc(const Graph& g);

// Expansion of p_lambda in the e basis obtained from acyclic arrow subsets of
// the cycle-union digraph tau(lambda):
//   p_lambda = (-1)^n * sum_mu (-1)^(l(mu)) c[mu] e_mu.
SymFunc p_to_e_via_tau(const Partition& lambda);

// Pair counts / determinant sums behind the two cycle-function expansions:
// over path covers E of d with t(E) = lambda,
//   z_e_coefficient_direct sums the number of cycle covers of d/E, and equals
//     (-1)^(n - l(lambda)) * [e_lambda] z_symfunc(d);
//   z_h_coefficient_direct sums det(adjacency(d/E)), and equals
//     [h_lambda] z_symfunc(d).
Int z_e_coefficient_direct(const Digraph& d, const Partition& lambda);
Int z_h_coefficient_direct(const Digraph& d, const Partition& lambda);

// [e_lambda] of the chromatic symmetric function of inc(P), computed as a
// determinant sum over weakly decreasing path covers (path covers of the
// complement of the order digraph).
Int inc_e_coefficient(const Poset& p, const Partition& lambda);

// Specialize the chromatic symmetric function to k equal variables: the
// number of proper k-colorings for k >= 0 (sum of p-coefficients times
// k^length; exact, asserted integral).
Int chromatic_polynomial_eval(const Graph& g, int k);

// Hamiltonian-path count of h recovered from Hamiltonian-cycle counts of all
// restrictions of h and of its complement, summed over set partitions:
//   pi(h) = sum_sigma prod_{T in sigma} ( zc(h|T) - (-1)^|T| zc(hbar|T) ).
Int pi_via_berge_lass(const Digraph& h);

}  // namespace cyclecover
