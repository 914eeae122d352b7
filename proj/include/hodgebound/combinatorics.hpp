#pragma once

// Bitmask encoding of increasing multi-indices and the lexicographic
// rank/unrank bijection used for all Lambda^p bases. Bit i of a mask set
// means frame vector e_i (0-based) belongs to the subset; the basis of
// Lambda^p is ordered lexicographically on the increasing index tuples.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace hodgebound {

using Index = Eigen::Index;
using Mask = std::uint32_t;

// Masks fit in 32 bits with room to spare; dense Lambda^p matrices stay
// desk-sized up to here (C(12,6) = 924).
inline constexpr int kMaxDimension = 12;

constexpr Index binomial(int n, int k) noexcept {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Index r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

// Number of set bits strictly below position i.
constexpr int bits_below(Mask m, int i) noexcept {
  return std::popcount(m & ((Mask{1} << i) - 1));
}

constexpr bool contains(Mask m, int i) noexcept { return (m >> i) & 1u; }

struct SignedMask {
  int sign;   // +1 / -1, or 0 when the operation annihilates
  Mask bits;  // undefined when sign == 0
};

// eta^i wedged onto the left of eta^bits: sign (-1)^{#elements below i}.
constexpr SignedMask insert_with_sign(Mask bits, int i) noexcept {
  if (contains(bits, i)) return {0, 0};
  int s = bits_below(bits, i) % 2 ? -1 : 1;
  return {s, bits | (Mask{1} << i)};
}

// Interior product by e_i on the basis form eta^bits: same parity rule.
constexpr SignedMask remove_with_sign(Mask bits, int i) noexcept {
  if (!contains(bits, i)) return {0, 0};
  int s = bits_below(bits, i) % 2 ? -1 : 1;
  return {s, bits & ~(Mask{1} << i)};
}

// Sign of eta^a ^ eta^b relative to the increasing arrangement of a|b;
// counts the transpositions needed to merge the two masks. 0 on overlap.
constexpr int merge_sign(Mask a, Mask b) noexcept {
  if (a & b) return 0;
  int inversions = 0;
  Mask rest = b;
  while (rest) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

// A p-subset of the frame {e_0..e_{n-1}} with its declared cardinality.
struct MultiIndex {
  int n = 0;
  int p = 0;
  Mask bits = 0;
};

inline void check_multi_index(const MultiIndex& a) {
  if (a.n < 0 || a.n > kMaxDimension)
    throw std::invalid_argument("MultiIndex: n out of range");
  if (a.bits >> a.n) throw std::invalid_argument("MultiIndex: bit beyond n");
  if (popcount(a.bits) != a.p)
    throw std::invalid_argument("MultiIndex: cardinality mismatch with p");
}

// Lexicographic rank of the increasing tuple encoded by a.bits among all
// p-subsets of {0..n-1}, via the combinatorial number system.
inline Index rank_subset(const MultiIndex& a) {
  check_multi_index(a);
  Index r = 0;
  int prev = -1, seen = 0;
  Mask rest = a.bits;
  while (rest) {
    int cur = std::countr_zero(rest);
    rest &= rest - 1;
    ++seen;
    for (int j = prev + 1; j < cur; ++j) r += binomial(a.n - 1 - j, a.p - seen);
    prev = cur;
  }
  return r;
}

inline MultiIndex unrank_subset(int n, int p, Index r) {
  if (p < 0 || p > n) throw std::invalid_argument("unrank_subset: bad degree");
  if (r < 0 || r >= binomial(n, p))
    throw std::invalid_argument("unrank_subset: rank out of range");
  Mask bits = 0;
  int prev = -1;
  for (int slot = 1; slot <= p; ++slot) {
    for (int j = prev + 1;; ++j) {
      Index block = binomial(n - 1 - j, p - slot);
      if (r < block) {
        bits |= Mask{1} << j;
        prev = j;
        break;
      }
      r -= block;
    }
  }
  return {n, p, bits};
}

// Cached lexicographic basis of Lambda^p: rank -> mask and mask -> rank.
class FormBasis {
 public:
  FormBasis(int n, int p) : n_(n), p_(p) {
    if (n < 0 || n > kMaxDimension || p < 0 || p > n)
      throw std::invalid_argument("FormBasis: bad (n, p)");
    const Index d = binomial(n, p);
    masks_.reserve(static_cast<std::size_t>(d));
    ranks_.assign(std::size_t{1} << n, -1);
    for (Index r = 0; r < d; ++r) {
      Mask m = unrank_subset(n, p, r).bits;
      masks_.push_back(m);
      ranks_[m] = r;
    }
  }

  int n() const noexcept { return n_; }
  int degree() const noexcept { return p_; }
  Index dim() const noexcept { return static_cast<Index>(masks_.size()); }
  Mask mask(Index r) const { return masks_.at(static_cast<std::size_t>(r)); }
  Index rank(Mask m) const {
    Index r = ranks_.at(m);
    if (r < 0) throw std::invalid_argument("FormBasis: mask not in basis");
    return r;
  }

 private:
  int n_, p_;
  std::vector<Mask> masks_;
  std::vector<Index> ranks_;
};

}  // namespace hodgebound
