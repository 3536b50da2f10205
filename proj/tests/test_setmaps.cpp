#include <bit>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "cyclecover/census.hpp"
#include "cyclecover/enumerate.hpp"
#include "cyclecover/errors.hpp"
#include "cyclecover/setmap.hpp"

using namespace cyclecover;

namespace {

SetMap random_invertible(int ground, std::mt19937_64& rng) {
  SetMap h(ground);
  h.set_value(0, 1);
  for (std::uint32_t s = 1; s < (std::uint32_t(1) << ground); ++s) {
    long long num = static_cast<long long>(rng() % 9) - 4;
    long long den = 1 + static_cast<long long>(rng() % 3);
    h.set_value(s, Rational(num, den));
  }
  return h;
}

}  // namespace

TEST_CASE("set map basics") {
  SetMap h(2);
  CHECK(h.ground() == 2);
  CHECK(h.value(0b11u) == 0);
  h.set_value(0b11u, Rational(3, 2));
  CHECK(h.value(0b11u) == Rational(3, 2));
  CHECK_THROWS_AS(h.value(0b100u), DomainError);
  CHECK_THROWS_AS(h.set_value(0b100u, 1), DomainError);
  CHECK_THROWS_AS(SetMap(kMaxSetMapGround + 1), DomainError);
  CHECK_THROWS_AS(SetMap(-1), DomainError);

  SetMap eps = SetMap::identity(3);
  CHECK(eps.value(0) == 1);
  for (std::uint32_t s = 1; s < 8; ++s) CHECK(eps.value(s) == 0);
}

TEST_CASE("convolution has the identity and two singleton splits") {
  SetMap ind(3);  // indicator of singletons
  for (int v = 0; v < 3; ++v) ind.set_value(std::uint32_t(1) << v, 1);
  SetMap sq = setmap_multiply(ind, ind);
  CHECK(sq.value(0b011u) == 2);  // {0}+{1} and {1}+{0}
  CHECK(sq.value(0b001u) == 0);
  CHECK(sq.value(0) == 0);

  std::mt19937_64 rng(5);
  SetMap h = random_invertible(3, rng);
  CHECK(setmap_multiply(h, SetMap::identity(3)) == h);
  CHECK(setmap_multiply(SetMap::identity(3), h) == h);
  CHECK_THROWS_AS(setmap_multiply(h, SetMap(2)), DomainError);
}

TEST_CASE("convolution is associative and commutes on random triples") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    SetMap a = random_invertible(4, rng);
    SetMap b = random_invertible(4, rng);
    SetMap c = random_invertible(4, rng);
    CHECK(setmap_multiply(setmap_multiply(a, b), c) ==
          setmap_multiply(a, setmap_multiply(b, c)));
    CHECK(setmap_multiply(a, b) == setmap_multiply(b, a));
  }
}

TEST_CASE("inverse round trips and rejects the non-invertible") {
  CHECK(setmap_inverse(SetMap::identity(4)) == SetMap::identity(4));
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    SetMap h = random_invertible(4, rng);
    CHECK(setmap_multiply(h, setmap_inverse(h)) == SetMap::identity(4));
    CHECK(setmap_inverse(setmap_inverse(h)) == h);
  }
  SetMap bad(2);
  bad.set_value(0b01u, 5);
  CHECK_THROWS_AS(setmap_inverse(bad), DomainError);  // zero on the empty set
}

TEST_CASE("path set maps and their signed complement inverses") {
  // h(S) counts Hamiltonian paths of the restriction; the convolution inverse
  // is the complement's path map with alternating signs.
  for (int n = 1; n <= 3; ++n)
    for (const Digraph& d : all_digraphs(n)) {
      SetMap h = path_setmap(d);
      CHECK(h.value(0) == 1);
      SetMap inverse = setmap_inverse(h);
      Digraph dbar = complement(d);
      for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s) {
        Int pi = count_hamiltonian_paths(restrict_to(dbar, s));
        int sign = (std::popcount(s) % 2) ? -1 : 1;
        CHECK(inverse.value(s) == Rational(sign * pi));
      }
    }

  Digraph fig(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  SetMap h = path_setmap(complement(fig));
  CHECK(h.value(0b1111u) == 7);
  SetMap signed_h(4);
  for (std::uint32_t s = 0; s < 16; ++s) {
    int sign = (std::popcount(s) % 2) ? -1 : 1;
    signed_h.set_value(s, Rational(sign) * path_setmap(fig).value(s));
  }
  CHECK(setmap_multiply(h, signed_h) == SetMap::identity(4));
}

TEST_CASE("signed split-path sum vanishes") {
  for (int n = 1; n <= 3; ++n)
    for (const Digraph& d : all_digraphs(n)) CHECK(pathsum_signed_sum(d) == 0);
  CHECK(pathsum_signed_sum(Digraph(4, {{0, 1}, {1, 2}, {2, 3}})) == 0);
}

TEST_CASE("vertex transfer is a sign-reversing fixed-point-free involution") {
  for (int n = 1; n <= 3; ++n)
    for (const Digraph& d : all_digraphs(n)) {
      auto pairs = all_path_pairs(d);
      CHECK(std::set<PathPair>(pairs.begin(), pairs.end()).size() == pairs.size());
      for (const auto& pair : pairs) {
        PathPair image = pathsum_involution(d, pair);
        CHECK(image != pair);
        CHECK((image.complement_path.size() + pair.complement_path.size()) % 2 == 1);
        CHECK(pathsum_involution(d, image) == pair);
        CHECK(std::binary_search(pairs.begin(), pairs.end(), image));
      }
    }
}

TEST_CASE("vertex transfer worked examples") {
  Digraph d(2, {{0, 1}});
  // Empty host path: the complement path's first vertex splits off.
  PathPair start{{}, {1, 0}};
  PathPair moved = pathsum_involution(d, start);
  PathPair split{{1}, {0}};
  CHECK(moved == split);
  CHECK(pathsum_involution(d, moved) == start);

  // Host path exhausted the complement: its last vertex moves over.
  PathPair full{{0, 1}, {}};
  PathPair shifted{{0}, {1}};
  CHECK(pathsum_involution(d, full) == shifted);

  PathPair overlap{{0, 1}, {0}};
  CHECK_THROWS_AS(pathsum_involution(d, overlap), DomainError);
  PathPair non_path{{1, 0}, {}};
  CHECK_THROWS_AS(pathsum_involution(d, non_path), DomainError);
}

TEST_CASE("reciprocity holds for path set maps and random invertible maps") {
  for (int n = 1; n <= 3; ++n)
    for (const Digraph& d : all_digraphs(n)) {
      SetMap h = path_setmap(d);
      for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s)
        CHECK(lass_reciprocity_check(h, s));
    }

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    SetMap h = random_invertible(4, rng);
    for (std::uint32_t s = 1; s < 16; ++s) CHECK(lass_reciprocity_check(h, s));
  }
}

TEST_CASE("reciprocity needs the empty-set value pinned to one") {
  // Scaling the empty-set value breaks the identity already in degree one:
  // the left side keeps h({v}) while the right side divides by the square.
  SetMap h = SetMap::identity(2);
  h.set_value(0, 2);
  h.set_value(0b01u, 1);
  h.set_value(0b10u, 1);
  h.set_value(0b11u, 1);
  CHECK_FALSE(lass_reciprocity_check(h, 0b01u));

  SetMap zero(2);
  CHECK_THROWS_AS(lass_reciprocity_check(zero, 0b01u), DomainError);  // not invertible
  SetMap ok = SetMap::identity(2);
  CHECK_THROWS_AS(lass_reciprocity_check(ok, 0u), DomainError);       // empty subset
  CHECK_THROWS_AS(lass_reciprocity_check(ok, 0b100u), DomainError);   // outside ground
}
