#pragma once

// Exact-convention multilinear algebra on Lambda* R^n over an orthonormal
// frame: p-forms as coefficient vectors over the lexicographic basis of
// p-subsets, wedge and interior products, Hodge star, inner products, and
// derivation extensions of endomorphisms. All signs come from bitmask
// transposition counts; the interior product is the adjoint of left
// exterior multiplication, which makes that relation exactly testable.

#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "hodgebound/combinatorics.hpp"

namespace hodgebound {

template <typename Scalar>
using VectorX = Eigen::Vector<Scalar, Eigen::Dynamic>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// A p-form on R^n: C(n,p) coefficients over lexicographically ordered
// p-subsets of the frame. Degree-0 forms are scalars, degree-n forms are
// 1-dimensional.
template <typename Scalar>
class PForm {
 public:
  PForm(int n, int p)
      : n_(n), p_(p), coeffs_(VectorX<Scalar>::Zero(binomial(n, p))) {
    check_shape(n, p);
  }

  PForm(int n, int p, VectorX<Scalar> coeffs)
      : n_(n), p_(p), coeffs_(std::move(coeffs)) {
    check_shape(n, p);
    if (coeffs_.size() != binomial(n, p))
      throw std::invalid_argument("PForm: coefficient length != C(n,p)");
  }

  // The basis form eta^m (coefficient 1 on the given subset mask).
  static PForm basis_element(int n, Mask m) {
    PForm w(n, popcount(m));
    w.coeffs_[rank_subset({n, w.p_, m})] = Scalar(1);
    return w;
  }

  int n() const noexcept { return n_; }
  int degree() const noexcept { return p_; }
  Index dim() const noexcept { return coeffs_.size(); }

  const VectorX<Scalar>& coeffs() const noexcept { return coeffs_; }
  VectorX<Scalar>& coeffs() noexcept { return coeffs_; }

  Scalar coeff(Mask m) const { return coeffs_[rank_subset({n_, p_, m})]; }
  Scalar& coeff(Mask m) { return coeffs_[rank_subset({n_, p_, m})]; }

  Scalar squared_norm() const { return coeffs_.squaredNorm(); }

 private:
  static void check_shape(int n, int p) {
    if (n < 0 || n > kMaxDimension) throw std::invalid_argument("PForm: n out of range");
    if (p < 0 || p > n) throw std::invalid_argument("PForm: degree out of range");
  }

  int n_, p_;
  VectorX<Scalar> coeffs_;
};

using PFormd = PForm<double>;

// Orthonormal-frame inner product: Euclidean on coefficient tables.
template <typename Scalar>
Scalar form_inner(const PForm<Scalar>& w, const PForm<Scalar>& t) {
  if (w.n() != t.n() || w.degree() != t.degree())
    throw std::invalid_argument("form_inner: shape mismatch");
  return w.coeffs().dot(t.coeffs());
}

// w ^ t. Degree overflow past n returns the zero n-form rather than
// erroring, so identities like the antiderivation law hold unconditionally.
template <typename Scalar>
PForm<Scalar> wedge(const PForm<Scalar>& w, const PForm<Scalar>& t) {
  if (w.n() != t.n()) throw std::invalid_argument("wedge: frame size mismatch");
  const int n = w.n(), p = w.degree(), q = t.degree();
  if (p + q > n) return PForm<Scalar>(n, n);
  PForm<Scalar> out(n, p + q);
  const FormBasis bp(n, p), bq(n, q), bpq(n, p + q);
  for (Index i = 0; i < bp.dim(); ++i) {
    const Scalar wi = w.coeffs()[i];
    if (wi == Scalar(0)) continue;
    const Mask a = bp.mask(i);
    for (Index j = 0; j < bq.dim(); ++j) {
      const Mask b = bq.mask(j);
      const int s = merge_sign(a, b);
      if (s) out.coeffs()[bpq.rank(a | b)] += Scalar(s) * wi * t.coeffs()[j];
    }
  }
  return out;
}

// iota_{e_k} w for a frame vector (0-based index). On 0-forms returns the
// zero 0-form by convention.
template <typename Scalar>
PForm<Scalar> interior(int k, const PForm<Scalar>& w) {
  const int n = w.n(), p = w.degree();
  if (k < 0 || k >= n) throw std::invalid_argument("interior: frame index out of range");
  if (p == 0) return PForm<Scalar>(n, 0);
  PForm<Scalar> out(n, p - 1);
  const FormBasis bp(n, p), bq(n, p - 1);
  for (Index i = 0; i < bp.dim(); ++i) {
    const SignedMask r = remove_with_sign(bp.mask(i), k);
    if (r.sign) out.coeffs()[bq.rank(r.bits)] += Scalar(r.sign) * w.coeffs()[i];
  }
  return out;
}

// iota_X w for a general vector X = sum X_k e_k.
template <typename Scalar, typename Derived>
PForm<Scalar> interior(const Eigen::MatrixBase<Derived>& X, const PForm<Scalar>& w) {
  const int n = w.n(), p = w.degree();
  if (X.size() != n) throw std::invalid_argument("interior: vector length != n");
  if (p == 0) return PForm<Scalar>(n, 0);
  PForm<Scalar> out(n, p - 1);
  const FormBasis bp(n, p), bq(n, p - 1);
  for (Index i = 0; i < bp.dim(); ++i) {
    const Scalar wi = w.coeffs()[i];
    if (wi == Scalar(0)) continue;
    Mask rest = bp.mask(i);
    while (rest) {
      const int k = std::countr_zero(rest);
      rest &= rest - 1;
      const SignedMask r = remove_with_sign(bp.mask(i), k);
      out.coeffs()[bq.rank(r.bits)] += Scalar(r.sign) * X(k) * wi;
    }
  }
  return out;
}

// Hodge star: star(eta^a) = sign * eta^{a^c} with the sign of the
// permutation (a, a^c) relative to (e_0..e_{n-1}); star(star(w)) =
// (-1)^{p(n-p)} w follows.
template <typename Scalar>
PForm<Scalar> hodge_star(const PForm<Scalar>& w) {
  const int n = w.n(), p = w.degree();
  PForm<Scalar> out(n, n - p);
  const FormBasis bp(n, p), bq(n, n - p);
  const Mask full = (Mask{1} << n) - 1;
  for (Index i = 0; i < bp.dim(); ++i) {
    const Mask a = bp.mask(i);
    const Mask c = full & ~a;
    out.coeffs()[bq.rank(c)] = Scalar(merge_sign(a, c)) * w.coeffs()[i];
  }
  return out;
}

// A dense endomorphism of Lambda^p; houses Weitzenboeck operators, pulled
// back ambient operators, and shape-operator extensions.
template <typename Scalar>
class OperatorOnForms {
 public:
  OperatorOnForms(int n, int p)
      : n_(n), p_(p),
        entries_(MatrixX<Scalar>::Zero(binomial(n, p), binomial(n, p))) {}

  OperatorOnForms(int n, int p, MatrixX<Scalar> entries)
      : n_(n), p_(p), entries_(std::move(entries)) {
    if (entries_.rows() != binomial(n, p) || entries_.cols() != binomial(n, p))
      throw std::invalid_argument("OperatorOnForms: entry shape != C(n,p)^2");
  }

  int n() const noexcept { return n_; }
  int degree() const noexcept { return p_; }
  Index dim() const noexcept { return entries_.rows(); }
  const MatrixX<Scalar>& entries() const noexcept { return entries_; }
  MatrixX<Scalar>& entries() noexcept { return entries_; }

  PForm<Scalar> operator()(const PForm<Scalar>& w) const {
    if (w.n() != n_ || w.degree() != p_)
      throw std::invalid_argument("OperatorOnForms: form shape mismatch");
    return PForm<Scalar>(n_, p_, entries_ * w.coeffs());
  }

 private:
  int n_, p_;
  MatrixX<Scalar> entries_;
};

using OperatorOnFormsd = OperatorOnForms<double>;

// The unique derivation on Lambda* agreeing with A on Lambda^1, restricted
// to Lambda^p: A(w ^ t) = A(w) ^ t + w ^ A(t). Identity extends to p*Id;
// symmetric input yields a symmetric matrix; for symmetric A it coincides
// with w -> sum_i eta^i ^ iota_{A e_i} w.
template <typename Derived>
OperatorOnForms<typename Derived::Scalar> derivation_extend(
    const Eigen::MatrixBase<Derived>& A, int p) {
  using Scalar = typename Derived::Scalar;
  const int n = static_cast<int>(A.rows());
  if (A.rows() != A.cols()) throw std::invalid_argument("derivation_extend: A not square");
  OperatorOnForms<Scalar> out(n, p);
  const FormBasis basis(n, p);
  for (Index col = 0; col < basis.dim(); ++col) {
    const Mask a = basis.mask(col);
    Mask rest = a;
    while (rest) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      const SignedMask rm = remove_with_sign(a, i);
      for (int k = 0; k < n; ++k) {
        const Scalar aki = A(k, i);
        if (aki == Scalar(0)) continue;
        const SignedMask in = insert_with_sign(rm.bits, k);
        if (in.sign)
          out.entries()(basis.rank(in.bits), col) += Scalar(rm.sign * in.sign) * aki;
      }
    }
  }
  return out;
}

}  // namespace hodgebound
