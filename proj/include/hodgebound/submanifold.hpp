#pragma once

// Second-fundamental-form data and the extrinsic quantities derived from
// it: mean curvature, traceless part, shape-operator extensions to
// Lambda^p, the curvature-gap identity, p-curvatures, beta_p, gamma_p, and
// the stability quantity over an index split.

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "hodgebound/curvature.hpp"
#include "hodgebound/forms.hpp"

namespace hodgebound {

// h^a_ij, symmetric in (i,j), for normal directions a = 1..m.
template <typename Scalar>
struct SecondFundamentalForm {
  int n = 0;
  int m = 0;
  std::vector<MatrixX<Scalar>> h;  // m symmetric n x n matrices

  void validate(Scalar tol = Scalar(1e-12)) const {
    if (n < 1 || n > kMaxDimension)
      throw std::invalid_argument("SecondFundamentalForm: n out of range");
    if (m < 0 || static_cast<int>(h.size()) != m)
      throw std::invalid_argument("SecondFundamentalForm: normal count mismatch");
    for (const auto& ha : h) {
      if (ha.rows() != n || ha.cols() != n)
        throw std::invalid_argument("SecondFundamentalForm: component shape");
      if ((ha - ha.transpose()).template lpNorm<Eigen::Infinity>() > tol)
        throw std::invalid_argument("SecondFundamentalForm: not symmetric");
    }
  }
};

using SecondFundamentalFormd = SecondFundamentalForm<double>;

// Codimension-1 convenience constructor from a diagonal of principal
// curvatures.
template <typename Scalar>
SecondFundamentalForm<Scalar> principal_sff(const VectorX<Scalar>& k) {
  SecondFundamentalForm<Scalar> B;
  B.n = static_cast<int>(k.size());
  B.m = 1;
  B.h = {MatrixX<Scalar>(k.asDiagonal())};
  return B;
}

// Mean curvature vector, squared norms, traceless decomposition, and
// principal curvatures per normal direction.
template <typename Scalar>
struct ExtrinsicSummary {
  VectorX<Scalar> H;       // mean curvature vector, length m
  Scalar Hnorm2 = 0;       // |H|^2
  Scalar B2 = 0;           // |B|^2
  Scalar Bring2 = 0;       // |B ring|^2 = |B|^2 - n |H|^2
  std::vector<VectorX<Scalar>> principal;  // eigenvalues of each h^a, ascending
};

template <typename Scalar>
ExtrinsicSummary<Scalar> summarize(const SecondFundamentalForm<Scalar>& B) {
  B.validate();
  ExtrinsicSummary<Scalar> s;
  s.H = VectorX<Scalar>::Zero(B.m);
  for (int a = 0; a < B.m; ++a) {
    const auto& ha = B.h[a];
    s.H[a] = ha.trace() / Scalar(B.n);
    s.B2 += ha.squaredNorm();
    s.Bring2 += (ha - s.H[a] * MatrixX<Scalar>::Identity(B.n, B.n)).squaredNorm();
    Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(ha);
    s.principal.push_back(es.eigenvalues());
  }
  s.Hnorm2 = s.H.squaredNorm();
  return s;
}

// Shape endomorphisms extended to Lambda^p as derivations: S^a extends
// A^a = h^a, and the traceless variants extend h^a - H^a Id.
template <typename Scalar>
struct ShapeExtension {
  std::vector<OperatorOnForms<Scalar>> S;      // derivation_extend(h^a, p)
  std::vector<OperatorOnForms<Scalar>> Sring;  // derivation_extend(h^a - H^a Id, p)
};

template <typename Scalar>
ShapeExtension<Scalar> shape_extension(const SecondFundamentalForm<Scalar>& B, int p) {
  if (p < 1 || p > B.n - 1)
    throw std::invalid_argument("shape_extension: degree out of range");
  const ExtrinsicSummary<Scalar> s = summarize(B);
  ShapeExtension<Scalar> out;
  for (int a = 0; a < B.m; ++a) {
    out.S.push_back(derivation_extend(B.h[a], p));
    out.Sring.push_back(derivation_extend(
        MatrixX<Scalar>(B.h[a] - s.H[a] * MatrixX<Scalar>::Identity(B.n, B.n)), p));
  }
  return out;
}

// Residual of the identity behind the umbilic-defect eigenvalue estimate:
// for a submanifold of a constant-curvature-c ambient space,
//   <W^[p] w, w> - p(n-p) c |w|^2 + |S(w) - (n/2) H w|^2
//     - (n^2/4) |H|^2 |w|^2  ==  0,
// with W^[p] built from the Gauss-equation intrinsic curvature and the
// normal-bundle norm summing component squares over a.
template <typename Scalar>
Scalar gap_identity_residual(Scalar ambient_c, const SecondFundamentalForm<Scalar>& B,
                             int p, const PForm<Scalar>& w) {
  if (w.n() != B.n || w.degree() != p)
    throw std::invalid_argument("gap_identity_residual: form shape mismatch");
  const ExtrinsicSummary<Scalar> s = summarize(B);
  const CurvatureTensor<Scalar> R =
      gauss_intrinsic(constant_curvature<Scalar>(B.n, ambient_c), B.h);
  const Scalar w2 = w.squared_norm();
  Scalar acc = form_inner(weitzenboeck(R, p)(w), w) - Scalar(p * (B.n - p)) * ambient_c * w2;
  const ShapeExtension<Scalar> ext = shape_extension(B, p);
  for (int a = 0; a < B.m; ++a) {
    const VectorX<Scalar> dev =
        ext.S[a].entries() * w.coeffs() - (Scalar(B.n) / 2) * s.H[a] * w.coeffs();
    acc += dev.squaredNorm();
  }
  acc -= (Scalar(B.n) * B.n / 4) * s.Hnorm2 * w2;
  return acc;
}

// Stability quantity over the split {perm[0..p-1]} | {perm[p..n-1]}:
// sum over cross pairs and normal directions of 2 h_ij^2 - h_ii h_jj.
// Strict negativity over every split rules out stable p-currents.
template <typename Scalar>
Scalar ls_quantity(const SecondFundamentalForm<Scalar>& B, int p,
                   const std::vector<int>& perm) {
  B.validate();
  if (p < 1 || p > B.n - 1)
    throw std::invalid_argument("ls_quantity: degree out of range");
  if (static_cast<int>(perm.size()) != B.n)
    throw std::invalid_argument("ls_quantity: permutation length != n");
  std::vector<bool> seen(B.n, false);
  for (int v : perm) {
    if (v < 0 || v >= B.n || seen[v])
      throw std::invalid_argument("ls_quantity: not a permutation of 0..n-1");
    seen[v] = true;
  }
  Scalar acc = 0;
  for (const auto& ha : B.h)
    for (int i = 0; i < p; ++i)
      for (int j = p; j < B.n; ++j) {
        const Scalar hij = ha(perm[i], perm[j]);
        acc += 2 * hij * hij - ha(perm[i], perm[i]) * ha(perm[j], perm[j]);
      }
  return acc;
}

template <typename Scalar>
Scalar ls_quantity(const SecondFundamentalForm<Scalar>& B, int p) {
  std::vector<int> id(B.n);
  std::iota(id.begin(), id.end(), 0);
  return ls_quantity(B, p, id);
}

// beta_p for a codimension-1 submanifold with principal curvatures k:
// (1/(p(n-p))) min over p-subsets alpha of K_alpha * K_alpha-complement,
// where K_alpha sums the principal curvatures over alpha (principal frame).
template <typename Scalar>
Scalar p_curvature_beta(const VectorX<Scalar>& k, int p) {
  const int n = static_cast<int>(k.size());
  if (p < 1 || p > n - 1)
    throw std::invalid_argument("p_curvature_beta: degree out of range");
  const Scalar total = k.sum();
  const FormBasis basis(n, p);
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (Index r = 0; r < basis.dim(); ++r) {
    Scalar ka = 0;
    Mask rest = basis.mask(r);
    while (rest) {
      ka += k[std::countr_zero(rest)];
      rest &= rest - 1;
    }
    best = std::min(best, ka * (total - ka));
  }
  return best / Scalar(p * (n - p));
}

// gamma_p = -(1/n)|Bring|^2 - ((n-2p)|H| / sqrt(n p (n-p))) |Bring| + |H|^2,
// evaluated pointwise from the summary quantities.
template <typename Scalar>
Scalar gamma_p(const SecondFundamentalForm<Scalar>& B, int p) {
  if (p < 1 || p > B.n - 1)
    throw std::invalid_argument("gamma_p: degree out of range");
  const ExtrinsicSummary<Scalar> s = summarize(B);
  const Scalar n = Scalar(B.n);
  return -s.Bring2 / n -
         (Scalar(B.n - 2 * p) * std::sqrt(s.Hnorm2) / std::sqrt(n * p * (B.n - p))) *
             std::sqrt(s.Bring2) +
         s.Hnorm2;
}

}  // namespace hodgebound
