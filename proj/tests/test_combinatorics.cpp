#include <doctest.h>

#include "hodgebound/combinatorics.hpp"

using namespace hodgebound;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  for (int n = 0; n <= 12; ++n)
    for (int p = 0; p <= n; ++p)
      CHECK(binomial(n, p) == binomial(n, n - p));
}

TEST_CASE("mask primitives") {
  CHECK(popcount(0b1011u) == 3);
  CHECK(bits_below(0b1011u, 0) == 0);
  CHECK(bits_below(0b1011u, 1) == 1);
  CHECK(bits_below(0b1011u, 3) == 2);
  CHECK(contains(0b100u, 2));
  CHECK_FALSE(contains(0b100u, 1));
}

TEST_CASE("insert and remove signs") {
  // inserting eta^1 into eta^{0,2}: one element (e_0) below position 1
  const SignedMask in = insert_with_sign(0b101u, 1);
  CHECK(in.sign == -1);
  CHECK(in.bits == 0b111u);
  CHECK(insert_with_sign(0b101u, 0).sign == 0);  // already present

  const SignedMask rm = remove_with_sign(0b111u, 1);
  CHECK(rm.sign == -1);
  CHECK(rm.bits == 0b101u);
  CHECK(remove_with_sign(0b101u, 1).sign == 0);  // absent

  // insert then remove at the same slot is the identity with matching signs
  for (Mask m = 0; m < 64; ++m)
    for (int i = 0; i < 6; ++i) {
      const SignedMask a = insert_with_sign(m, i);
      if (!a.sign) continue;
      const SignedMask b = remove_with_sign(a.bits, i);
      CHECK(b.sign == a.sign);
      CHECK(b.bits == m);
    }
}

TEST_CASE("merge signs") {
  CHECK(merge_sign(0b001u, 0b010u) == 1);   // eta^0 ^ eta^1, already ordered
  CHECK(merge_sign(0b010u, 0b001u) == -1);  // eta^1 ^ eta^0, one transposition
  CHECK(merge_sign(0b011u, 0b011u) == 0);   // overlap annihilates
  CHECK(merge_sign(0b011u, 0b100u) == 1);
  CHECK(merge_sign(0b100u, 0b011u) == 1);   // two transpositions
  // graded anticommutativity at the mask level
  for (Mask a = 0; a < 32; ++a)
    for (Mask b = 0; b < 32; ++b) {
      if (a & b) continue;
      const int pq = popcount(a) * popcount(b);
      CHECK(merge_sign(a, b) == (pq % 2 ? -1 : 1) * merge_sign(b, a));
    }
}

TEST_CASE("lexicographic basis order is pinned") {
  const FormBasis basis(4, 2);
  REQUIRE(basis.dim() == 6);
  const Mask expected[6] = {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
  for (Index r = 0; r < 6; ++r) {
    CHECK(basis.mask(r) == expected[r]);
    CHECK(basis.rank(expected[r]) == r);
  }
}

TEST_CASE("rank and unrank invert each other") {
  for (int n = 0; n <= 8; ++n)
    for (int p = 0; p <= n; ++p)
      for (Index r = 0; r < binomial(n, p); ++r) {
        const MultiIndex a = unrank_subset(n, p, r);
        CHECK(popcount(a.bits) == p);
        CHECK(rank_subset(a) == r);
      }
}

TEST_CASE("rank rejects malformed multi-indices") {
  CHECK_THROWS_AS(rank_subset({4, 2, 0b111}), std::invalid_argument);
  CHECK_THROWS_AS(rank_subset({3, 1, 0b1000}), std::invalid_argument);
  CHECK_THROWS_AS(unrank_subset(4, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(FormBasis(13, 1), std::invalid_argument);
  const FormBasis basis(4, 2);
  CHECK_THROWS_AS(basis.rank(0b111u), std::invalid_argument);
}
