#pragma once

// Named property suites behind `verify`: each returns an order-stable list
// of CheckRecords, fully determined by (seed, trials).  Suites draw their
// randomness from a fresh generator so they can run independently or
// concatenated ("all") with identical results.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hodgebound/bounds.hpp"
#include "hodgebound/curvature.hpp"
#include "hodgebound/forms.hpp"
#include "hodgebound/models.hpp"
#include "hodgebound/report.hpp"
#include "hodgebound/rng.hpp"
#include "hodgebound/submanifold.hpp"

namespace hodgebound {

struct SuiteConfig {
  std::uint64_t seed = 0;
  int trials = 200;
  double tol = 1e-9;
};

namespace detail {

// Random curvature-shaped tensor with the pair/antisymmetry relations but
// no Bianchi identity (the operators under test never use Bianchi).
inline CurvatureTensord random_pair_symmetric_curvature(Rng& rng, int n) {
  CurvatureTensord T(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) T(i, j, k, l) = rng.normal();
  CurvatureTensord R(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double s = (T(i, j, k, l) + T(k, l, i, j)) / 2.0;
          const double sj = (T(j, i, k, l) + T(k, l, j, i)) / 2.0;
          const double sl = (T(i, j, l, k) + T(l, k, i, j)) / 2.0;
          const double sjl = (T(j, i, l, k) + T(l, k, j, i)) / 2.0;
          R(i, j, k, l) = (s - sj - sl + sjl) / 4.0;
        }
  return R;
}

// Random fully valid (Gauss-built) curvature tensor.
inline CurvatureTensord random_gauss_curvature(Rng& rng, int n, int m, double c) {
  std::vector<Eigen::MatrixXd> h;
  for (int a = 0; a < m; ++a) h.push_back(rng.symmetric_matrix(n));
  return gauss_intrinsic(constant_curvature(n, c), h);
}

inline SecondFundamentalFormd random_sff(Rng& rng, int n, int m) {
  SecondFundamentalFormd B;
  B.n = n;
  B.m = m;
  for (int a = 0; a < m; ++a) B.h.push_back(rng.symmetric_matrix(n));
  return B;
}

// Largest eigenvalue of a positive semidefinite symmetric matrix by power
// iteration with Rayleigh-quotient stopping; independent of the
// eigensolver used by spectral_norm.
inline double power_iteration_psd(const Eigen::MatrixXd& A, Rng& rng) {
  Eigen::VectorXd v = rng.vector(A.rows());
  v.normalize();
  double rayleigh = v.dot(A * v);
  for (int it = 0; it < 20000; ++it) {
    Eigen::VectorXd w = A * v;
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    v = w / norm;
    const double next = v.dot(A * v);
    if (std::abs(next - rayleigh) <= 1e-14 * std::max(1.0, std::abs(next)) && it > 32) {
      rayleigh = next;
      break;
    }
    rayleigh = next;
  }
  return rayleigh;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// algebra: basis order, signs, wedge/interior/star identities

inline std::vector<CheckRecord> suite_algebra(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  Rng rng(cfg.seed);
  const double tol_comb = 1e-12;

  {  // basis order pinned: n=4, p=2 ranks are {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}
    const Mask expect[] = {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
    const FormBasis b(4, 2);
    int mism = 0;
    for (Index r = 0; r < 6; ++r) mism += (b.mask(r) != expect[r]);
    out.push_back(residual_check("basis-lex-order", {{"n", 4}, {"p", 2}}, mism, 0));
  }
  {  // rank/unrank round-trip over every subset, n <= 8
    int mism = 0;
    for (int n = 1; n <= 8; ++n)
      for (int p = 0; p <= n; ++p) {
        const FormBasis b(n, p);
        for (Index r = 0; r < b.dim(); ++r)
          if (b.rank(b.mask(r)) != r) ++mism;
      }
    out.push_back(residual_check("rank-unrank-roundtrip", {{"nmax", 8}}, mism, 0));
  }
  {  // insert/remove signs compose to the identity
    int bad = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const int n = rng.uniform_int(1, 10);
      const int j = rng.uniform_int(0, n - 1);
      Mask m = 0;
      for (int i = 0; i < n; ++i)
        if (i != j && rng.uniform() < 0.5) m |= Mask(1) << i;
      const SignedMask ins = insert_with_sign(m, j);
      const SignedMask rem = remove_with_sign(ins.bits, j);
      if (rem.bits != m || ins.sign * rem.sign != 1) ++bad;
    }
    out.push_back(residual_check("insert-remove-inverse", {{"trials", double(cfg.trials)}},
                                 bad, 0));
  }
  {  // wedge anticommutativity and overflow behavior
    double worst = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const int n = rng.uniform_int(2, 6);
      const int p = rng.uniform_int(0, n);
      const int q = rng.uniform_int(0, n - p >= 0 ? n - p : 0);
      const PFormd w = rng.form(n, p);
      const PFormd z = rng.form(n, q);
      const double sign = (p * q) % 2 == 0 ? 1.0 : -1.0;
      worst = std::max(worst, (wedge(w, z).coeffs() - sign * wedge(z, w).coeffs())
                                  .lpNorm<Eigen::Infinity>());
    }
    out.push_back(
        residual_check("wedge-anticommute", {{"trials", double(cfg.trials)}}, worst, 1e-12));
  }
  {  // wedge associativity
    double worst = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const int n = rng.uniform_int(3, 6);
      const int p = rng.uniform_int(0, 2);
      const int q = rng.uniform_int(0, 2);
      const int r = rng.uniform_int(0, 2);
      const PFormd w = rng.form(n, p), z = rng.form(n, q), v = rng.form(n, r);
      worst = std::max(worst, (wedge(wedge(w, z), v).coeffs() -
                               wedge(w, wedge(z, v)).coeffs())
                                  .lpNorm<Eigen::Infinity>());
    }
    out.push_back(
        residual_check("wedge-associative", {{"trials", double(cfg.trials)}}, worst, 1e-12));
  }
  {  // star-star sign and isometry
    double worst_sign = 0, worst_iso = 0;
    for (int n = 1; n <= 6; ++n)
      for (int p = 0; p <= n; ++p) {
        const PFormd w = rng.form(n, p);
        const double sign = (p * (n - p)) % 2 == 0 ? 1.0 : -1.0;
        worst_sign = std::max(worst_sign, (hodge_star(hodge_star(w)).coeffs() -
                                           sign * w.coeffs())
                                              .lpNorm<Eigen::Infinity>());
        worst_iso = std::max(
            worst_iso, std::abs(hodge_star(w).squared_norm() - w.squared_norm()));
      }
    out.push_back(residual_check("star-involution-sign", {{"nmax", 6}}, worst_sign, 0));
    out.push_back(residual_check("star-isometry", {{"nmax", 6}}, worst_iso, tol_comb));
  }
  {  // interior product is adjoint to exterior multiplication
    double worst = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const int n = rng.uniform_int(1, 6);
      const int p = rng.uniform_int(1, n);
      const int k = rng.uniform_int(0, n - 1);
      const PFormd w = rng.form(n, p - 1), z = rng.form(n, p);
      const PFormd ek = PFormd::basis_element(n, Mask(1) << k);
      worst = std::max(worst, std::abs(form_inner(wedge(ek, w), z) -
                                       form_inner(w, interior(k, z))));
    }
    out.push_back(
        residual_check("interior-adjoint", {{"trials", double(cfg.trials)}}, worst, 1e-12));
  }
  {  // antiderivation law and iota_X iota_X = 0
    double worst = 0, worst_sq = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const int n = rng.uniform_int(2, 6);
      const int p = rng.uniform_int(1, n - 1);
      const int q = rng.uniform_int(0, n - p);
      const PFormd w = rng.form(n, p), z = rng.form(n, q);
      const Eigen::VectorXd X = rng.vector(n);
      const double sign = p % 2 == 0 ? 1.0 : -1.0;
      // On a 0-form the interior product vanishes identically (and has no
      // degree p+q-1 representative), so that term is only added for q >= 1.
      Eigen::VectorXd resid =
          interior(X, wedge(w, z)).coeffs() - wedge(interior(X, w), z).coeffs();
      if (q >= 1) resid -= sign * wedge(w, interior(X, z)).coeffs();
      worst = std::max(worst, resid.lpNorm<Eigen::Infinity>());
      if (p >= 2)
        worst_sq = std::max(
            worst_sq, interior(X, interior(X, rng.form(n, p))).coeffs().norm());
      else
        worst_sq = std::max(worst_sq, 0.0);
    }
    out.push_back(residual_check("interior-antiderivation",
                                 {{"trials", double(cfg.trials)}}, worst, 1e-12));
    out.push_back(residual_check("interior-squared-zero",
                                 {{"trials", double(cfg.trials)}}, worst_sq, 1e-12));
  }
  {  // derivation extension: identity, linearity, commutators, degree 1
    double worst_id = 0, worst_lin = 0, worst_comm = 0, worst_deg1 = 0, worst_routes = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const int n = rng.uniform_int(2, 6);
      const int p = rng.uniform_int(1, n - 1);
      const Eigen::MatrixXd A = rng.symmetric_matrix(n);
      const Eigen::MatrixXd B = rng.symmetric_matrix(n);
      const Index dim = binomial(n, p);
      worst_id = std::max(worst_id,
                          (derivation_extend(Eigen::MatrixXd::Identity(n, n), p).entries() -
                           double(p) * Eigen::MatrixXd::Identity(dim, dim))
                              .lpNorm<Eigen::Infinity>());
      worst_lin = std::max(worst_lin,
                           (derivation_extend(Eigen::MatrixXd(A + B), p).entries() -
                            derivation_extend(A, p).entries() -
                            derivation_extend(B, p).entries())
                               .lpNorm<Eigen::Infinity>());
      const Eigen::MatrixXd extA = derivation_extend(A, p).entries();
      const Eigen::MatrixXd extB = derivation_extend(B, p).entries();
      worst_comm = std::max(worst_comm,
                            (derivation_extend(Eigen::MatrixXd(A * B - B * A), p).entries() -
                             (extA * extB - extB * extA))
                                .lpNorm<Eigen::Infinity>());
      worst_deg1 = std::max(
          worst_deg1, (derivation_extend(A, 1).entries() - A).lpNorm<Eigen::Infinity>());
      // eta^i ^ iota_{A e_i} route
      const PFormd w = rng.form(n, p);
      VectorX<double> acc = VectorX<double>::Zero(dim);
      for (int i = 0; i < n; ++i) {
        const PFormd ei = PFormd::basis_element(n, Mask(1) << i);
        acc += wedge(ei, interior(Eigen::VectorXd(A.col(i)), w)).coeffs();
      }
      worst_routes =
          std::max(worst_routes, (acc - extA * w.coeffs()).lpNorm<Eigen::Infinity>());
    }
    out.push_back(residual_check("derivation-identity", {}, worst_id, 1e-12));
    out.push_back(residual_check("derivation-linearity", {}, worst_lin, 1e-12));
    out.push_back(residual_check("derivation-commutator", {}, worst_comm, 1e-10));
    out.push_back(residual_check("derivation-degree-one", {}, worst_deg1, 0));
    out.push_back(residual_check("derivation-wedge-route",
                                 {{"trials", double(cfg.trials)}}, worst_routes, 1e-10));
  }
  return out;
}

// ---------------------------------------------------------------------------
// curvature: Weitzenboeck routes, Ricci reductions, curvature operator

inline std::vector<CheckRecord> suite_curvature(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  Rng rng(cfg.seed);

  {  // constant curvature: W^[p] = p(n-p)c Id over the full grid
    double worst = 0;
    for (int n = 2; n <= 8; ++n)
      for (int p = 1; p <= n - 1; ++p)
        for (double c : {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0}) {
          const Index dim = binomial(n, p);
          worst = std::max(worst,
                           (weitzenboeck(constant_curvature(n, c), p).entries() -
                            double(p) * (n - p) * c * Eigen::MatrixXd::Identity(dim, dim))
                               .lpNorm<Eigen::Infinity>());
        }
    out.push_back(residual_check("weitzenboeck-constant", {{"nmax", 8}}, worst, 1e-9));
  }
  {  // degree 1 recovers the Ricci endomorphism
    double worst = 0;
    const int reps = std::max(cfg.trials / 2, 100);
    for (int t = 0; t < reps; ++t) {
      const int n = rng.uniform_int(2, 6);
      const CurvatureTensord R = detail::random_pair_symmetric_curvature(rng, n);
      worst = std::max(
          worst, (weitzenboeck(R, 1).entries() - ricci(R)).lpNorm<Eigen::Infinity>());
    }
    out.push_back(
        residual_check("weitzenboeck-ricci", {{"trials", double(reps)}}, worst, 1e-12));
  }
  {  // symmetry of the operator matrix
    double worst = 0;
    for (int t = 0; t < std::max(cfg.trials / 2, 100); ++t) {
      const int n = rng.uniform_int(2, 6);
      const int p = rng.uniform_int(1, n - 1);
      const CurvatureTensord R = detail::random_pair_symmetric_curvature(rng, n);
      const Eigen::MatrixXd W = weitzenboeck(R, p).entries();
      worst = std::max(worst, (W - W.transpose()).lpNorm<Eigen::Infinity>());
    }
    out.push_back(residual_check("weitzenboeck-symmetric", {}, worst, 1e-10));
  }
  {  // Hodge-star conjugation swaps degree p with n-p
    double worst = 0;
    for (int t = 0; t < std::max(cfg.trials / 4, 50); ++t) {
      const int n = rng.uniform_int(2, 6);
      const int p = rng.uniform_int(1, n - 1);
      const CurvatureTensord R = detail::random_pair_symmetric_curvature(rng, n);
      const Eigen::MatrixXd Wp = weitzenboeck(R, p).entries();
      const Eigen::MatrixXd Wq = weitzenboeck(R, n - p).entries();
      // columns of the star matrix: star of each basis p-form
      const FormBasis bp(n, p);
      Eigen::MatrixXd star(binomial(n, n - p), bp.dim());
      for (Index r = 0; r < bp.dim(); ++r)
        star.col(r) = hodge_star(PFormd::basis_element(n, bp.mask(r))).coeffs();
      worst =
          std::max(worst, (star * Wp - Wq * star).lpNorm<Eigen::Infinity>());
    }
    out.push_back(residual_check("weitzenboeck-star-duality", {}, worst, 1e-9));
  }
  {  // quadratic (curvature-operator) route equals route one
    double worst = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const int n = rng.uniform_int(2, 6);
      const int p = rng.uniform_int(1, n - 1);
      const CurvatureTensord R = detail::random_pair_symmetric_curvature(rng, n);
      const PFormd w = rng.form(n, p);
      const double direct = form_inner(weitzenboeck(R, p)(w), w);
      const double quad = weitzenboeck_quadratic(R, p, w);
      worst = std::max(worst, std::abs(direct - quad) / std::max(1.0, w.squared_norm()));
    }
    out.push_back(residual_check("weitzenboeck-two-routes",
                                 {{"trials", double(cfg.trials)}}, worst, 1e-8));
  }
  {  // constant curvature: operator = c Id on Lambda^2, Ric = (n-1)c Id
    double worst = 0;
    for (int n = 2; n <= 6; ++n)
      for (double c : {-1.0, 0.5, 2.0}) {
        const CurvatureTensord R = constant_curvature(n, c);
        const Index d2 = binomial(n, 2);
        worst = std::max(worst, (curvature_operator(R) -
                                 c * Eigen::MatrixXd::Identity(d2, d2))
                                    .lpNorm<Eigen::Infinity>());
        worst = std::max(worst, (ricci(R) - double(n - 1) * c *
                                                Eigen::MatrixXd::Identity(n, n))
                                    .lpNorm<Eigen::Infinity>());
        worst = std::max(worst, std::abs(scalar_curvature(R) - n * (n - 1) * c));
      }
    out.push_back(residual_check("constant-curvature-tables", {{"nmax", 6}}, worst, 1e-12));
  }
  {  // Gauss equation output satisfies all symmetries and first Bianchi
    double worst = 0;
    for (int t = 0; t < std::max(cfg.trials / 4, 50); ++t) {
      const int n = rng.uniform_int(2, 6);
      const int m = rng.uniform_int(1, 3);
      const CurvatureTensord R = detail::random_gauss_curvature(rng, n, m, rng.normal());
      worst = std::max(worst, double(R.symmetry_residual()));
      worst = std::max(worst, double(R.bianchi_residual()));
    }
    out.push_back(residual_check("gauss-symmetries", {}, worst, 1e-10));
  }
  {  // umbilic Gauss: unit sphere in flat ambient has constant curvature 1
    double worst = 0;
    for (int n = 2; n <= 8; ++n) {
      const CurvatureTensord R =
          gauss_intrinsic(constant_curvature(n, 0.0),
                          {Eigen::MatrixXd(Eigen::MatrixXd::Identity(n, n))});
      const CurvatureTensord C1 = constant_curvature(n, 1.0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
              worst = std::max(worst, std::abs(R(i, j, k, l) - C1(i, j, k, l)));
    }
    out.push_back(residual_check("gauss-umbilic-sphere", {{"nmax", 8}}, worst, 1e-12));
  }
  {  // weak Ricci: sums of diagonal entries; eigen-frame minimum
    double worst = 0;
    for (int t = 0; t < std::max(cfg.trials / 4, 50); ++t) {
      const int n = rng.uniform_int(2, 6);
      const int p = rng.uniform_int(1, n);
      const CurvatureTensord R = detail::random_pair_symmetric_curvature(rng, n);
      const Eigen::MatrixXd ric = ricci(R);
      const FormBasis b(n, p);
      const Index r = Index(rng.uniform_int(0, int(b.dim()) - 1));
      const MultiIndex alpha{n, p, b.mask(r)};
      double direct = 0;
      for (int i = 0; i < n; ++i)
        if (contains(alpha.bits, i)) direct += ric(i, i);
      worst = std::max(worst, std::abs(p_weak_ricci(R, alpha) - direct));
    }
    out.push_back(residual_check("weak-ricci-diagonal", {}, worst, 1e-12));
  }
  {  // ricci_p_min equals the smallest weak Ricci over index sets for
     // tensors whose Ricci is already diagonal (torus family)
    double worst = 0;
    for (int n : {4, 5, 6})
      for (int p = 1; p <= n - 1; ++p) {
        const ModelSpaced M = clifford_torus<double>(n, std::max(1, n / 2), 0.5);
        const FormBasis b(n, p);
        double best = std::numeric_limits<double>::infinity();
        for (Index r = 0; r < b.dim(); ++r)
          best = std::min(best, p_weak_ricci(M.intrinsic, MultiIndex{n, p, b.mask(r)}));
        worst = std::max(worst, std::abs(ricci_p_min(M.intrinsic, p) - best));
      }
    out.push_back(residual_check("ricci-p-min-eigenframe", {}, worst, 1e-10));
  }
  return out;
}

// ---------------------------------------------------------------------------
// identities: the curvature-gap identity behind the main eigenvalue bound

inline std::vector<CheckRecord> suite_identities(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  Rng rng(cfg.seed);

  {  // randomized: exact identity, relative to |w|^2
    double worst = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const int n = rng.uniform_int(2, 6);
      const int m = rng.uniform_int(1, 3);
      const int p = rng.uniform_int(1, n - 1);
      const double c = rng.normal();
      const SecondFundamentalFormd B = detail::random_sff(rng, n, m);
      const PFormd w = rng.form(n, p);
      worst = std::max(worst, std::abs(gap_identity_residual(c, B, p, w)) /
                                  w.squared_norm());
    }
    out.push_back(
        residual_check("gap-identity", {{"trials", double(cfg.trials)}}, worst, 1e-8));
  }
  {  // pinned: unit sphere as hypersurface of flat space
    SecondFundamentalFormd B = principal_sff(Eigen::VectorXd(Eigen::VectorXd::Ones(4)));
    const PFormd w = PFormd::basis_element(4, 0b0011);
    out.push_back(residual_check("gap-identity-sphere", {{"n", 4}, {"p", 2}},
                                 gap_identity_residual(0.0, B, 2, w), 1e-12));
  }
  {  // umbilic family: residual vanishes for B = h Id
    double worst = 0;
    for (int t = 0; t < std::max(cfg.trials / 4, 50); ++t) {
      const int n = rng.uniform_int(2, 6);
      const int p = rng.uniform_int(1, n - 1);
      const double hval = rng.normal();
      SecondFundamentalFormd B;
      B.n = n;
      B.m = 1;
      B.h = {Eigen::MatrixXd(hval * Eigen::MatrixXd::Identity(n, n))};
      const PFormd w = rng.form(n, p);
      worst = std::max(worst,
                       std::abs(gap_identity_residual(rng.normal(), B, p, w)) /
                           w.squared_norm());
    }
    out.push_back(residual_check("gap-identity-umbilic", {}, worst, 1e-9));
  }
  return out;
}

// ---------------------------------------------------------------------------
// inequalities: every operator-norm estimate and proof-chain display

inline std::vector<CheckRecord> suite_inequalities(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  Rng rng(cfg.seed);
  const double tol = cfg.tol;

  {  // derivation extensions against spectral data
    int viol = 0;
    for (int t = 0; t < cfg.trials * 5; ++t) {
      const int n = rng.uniform_int(2, 6);
      const int m = rng.uniform_int(1, 3);
      const int p = rng.uniform_int(1, n - 1);
      std::vector<Eigen::MatrixXd> A;
      for (int a = 0; a < m; ++a) A.push_back(rng.symmetric_matrix(n));
      if (!lemma42_check(A, p, rng.form(n, p), tol).holds) ++viol;
    }
    out.push_back(residual_check("ext-opnorm-bound",
                                 {{"trials", double(cfg.trials * 5)}}, viol, 0));
  }
  {  // degree-1 saturation at the top eigenvector of A^2
    double worst = 0;
    for (int t = 0; t < 25; ++t) {
      const int n = rng.uniform_int(2, 6);
      const Eigen::MatrixXd A = rng.symmetric_matrix(n);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(A * A));
      const PFormd w(n, 1, es.eigenvectors().col(n - 1));
      const auto chk = lemma42_check({A}, 1, w, tol);
      worst = std::max(worst, std::abs(chk.lhs - chk.rhs));
    }
    out.push_back(residual_check("ext-opnorm-equality-p1", {}, worst, 1e-8));
  }
  {  // traceless shape extensions: squared stacked norm vs p(n-p)/n |Bring|^2
    int viol = 0;
    for (int t = 0; t < cfg.trials * 5; ++t) {
      const int n = rng.uniform_int(2, 6);
      const int m = rng.uniform_int(1, 3);
      const int p = rng.uniform_int(1, n - 1);
      const SecondFundamentalFormd B = detail::random_sff(rng, n, m);
      const ExtrinsicSummary<double> s = summarize(B);
      const ShapeExtension<double> ext = shape_extension(B, p);
      std::vector<Eigen::MatrixXd> ops;
      for (const auto& S : ext.Sring) ops.push_back(S.entries());
      if (stacked_opnorm(ops) > double(p) * (n - p) / n * s.Bring2 + tol) ++viol;
    }
    out.push_back(residual_check("shape-opnorm-bound",
                                 {{"trials", double(cfg.trials * 5)}}, viol, 0));
  }
  {  // equality at the balanced Clifford pattern: both sides 4
    const SecondFundamentalFormd B =
        clifford_torus<double>(4, 2, 1.0).B;
    const ShapeExtension<double> ext = shape_extension(B, 2);
    const double lhs = stacked_opnorm<double>({ext.Sring[0].entries()});
    const ExtrinsicSummary<double> s = summarize(B);
    const double rhs = 2.0 * 2.0 / 4.0 * s.Bring2;
    out.push_back(residual_check("shape-opnorm-clifford", {{"n", 4}, {"p", 2}},
                                 lhs - rhs, 1e-10, {{"lhs", lhs}, {"rhs", rhs}}));
  }
  {  // operator-norm chain for the Ricci-based bound
    int viol = 0;
    for (int t = 0; t < cfg.trials * 2; ++t) {
      const int n = rng.uniform_int(3, 6);
      const int p = rng.uniform_int(1, n / 2);
      if (ricci_pinch_denominator(n, p) <= 0) continue;
      const int m = rng.uniform_int(1, 3);
      if (!thm15_opnorm_chain(detail::random_sff(rng, n, m), p, tol).holds) ++viol;
    }
    out.push_back(residual_check("ricci-chain-bound",
                                 {{"trials", double(cfg.trials * 2)}}, viol, 0));
  }
  {  // chain collapses to -p(n-p)|H|^2 for umbilic B, equality at Clifford
    SecondFundamentalFormd U;
    U.n = 5;
    U.m = 1;
    U.h = {Eigen::MatrixXd(0.7 * Eigen::MatrixXd::Identity(5, 5))};
    const auto chk = thm15_opnorm_chain(U, 2, tol);
    const double expect = -2.0 * 3.0 * 0.49;
    double worst = std::max(std::abs(chk.lhs - expect), std::abs(chk.rhs - expect));
    const auto cl = thm15_opnorm_chain(clifford_torus<double>(4, 2, 1.0).B, 2, tol);
    worst = std::max(worst, std::abs(cl.lhs - 4.0));
    worst = std::max(worst, std::abs(cl.rhs - 4.0));
    out.push_back(residual_check("ricci-chain-equality-cases", {}, worst, 1e-9));
  }
  {  // stable-current proof chain: splitting quantity vs Ricci expression
    int viol = 0;
    int ran = 0;
    for (int t = 0; t < cfg.trials * 3 && ran < cfg.trials * 2; ++t) {
      const int n = rng.uniform_int(4, 6);
      const int p = rng.uniform_int(2, n / 2);
      const double c = rng.uniform() < 0.5 ? 0.0 : 1.0;
      const int m = rng.uniform_int(1, 3);
      const SecondFundamentalFormd B = detail::random_sff(rng, n, m);
      const ExtrinsicSummary<double> s = summarize(B);
      const CurvatureTensord R = gauss_intrinsic(constant_curvature(n, c), B.h);
      const double C = double(ricci_pinch_denominator(n, p)) / (n - 2);
      const double rhs = C * ((n - 1) * (c + s.Hnorm2) - ricci_p_min(R, p) / p) -
                         double(p) * (n - p) * s.Hnorm2;
      if (ls_quantity(B, p) > rhs + tol) ++viol;
      ++ran;
    }
    out.push_back(residual_check("stable-current-chain", {{"trials", double(ran)}}, viol, 0));
  }
  {  // the split quantity only depends on the unordered split
    double worst = 0;
    for (int t = 0; t < std::max(cfg.trials / 4, 50); ++t) {
      const int n = rng.uniform_int(2, 6);
      const int p = rng.uniform_int(1, n - 1);
      const SecondFundamentalFormd B = detail::random_sff(rng, n, rng.uniform_int(1, 2));
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      // shuffle within each side
      for (int i = p - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
      for (int i = n - 1; i > p; --i)
        std::swap(perm[i], perm[p + rng.uniform_int(0, i - p)]);
      worst = std::max(worst,
                       std::abs(ls_quantity(B, p, perm) - ls_quantity(B, p)));
    }
    out.push_back(residual_check("split-quantity-invariance", {}, worst, 1e-12));
  }
  {  // weakened bounds never exceed the main bound; eps = 0 matches (i)
    int viol = 0;
    double worst_eps = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const int n = rng.uniform_int(3, 7);
      const int p = rng.uniform_int(1, n - 1);
      const double c = rng.normal();
      const SecondFundamentalFormd B = detail::random_sff(rng, n, rng.uniform_int(1, 2));
      const double main = thm11_bound(n, p, c, B);
      const auto cb = cor12_bounds(n, p, c, B, 0.0);
      if (cb.i > main + tol || cb.ii > main + tol) ++viol;
      worst_eps = std::max(worst_eps, std::abs(cb.eps - cb.i));
    }
    out.push_back(
        residual_check("weakened-bound-dominance", {{"trials", double(cfg.trials)}}, viol, 0));
    out.push_back(residual_check("eps-zero-matches-first", {}, worst_eps, 1e-12));
  }
  {  // norm threshold: minimum over degrees sits at degree 1
    int viol = 0;
    for (int t = 0; t < 100; ++t) {
      const int n = rng.uniform_int(3, 10);
      const double c = std::abs(rng.normal());
      const double Hn = std::abs(rng.normal());
      double best = std::numeric_limits<double>::infinity();
      for (int p = 1; p <= n - 1; ++p) best = std::min(best, alpha_threshold(n, p, c, Hn));
      if (best < alpha_threshold(n, 1, c, Hn) - tol) ++viol;
    }
    out.push_back(residual_check("alpha-min-at-degree-one", {{"trials", 100}}, viol, 0));
  }
  {  // |B|^2 <= alpha is equivalent to the curvature-side inequality
    int disagree = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const int n = rng.uniform_int(3, 6);
      const int p = rng.uniform_int(1, n - 1);
      const double c = std::abs(rng.normal());
      const SecondFundamentalFormd B = detail::random_sff(rng, n, rng.uniform_int(1, 3));
      const ExtrinsicSummary<double> s = summarize(B);
      const double lhs_gap = alpha_threshold(n, p, c, std::sqrt(s.Hnorm2)) - s.B2;
      const double rhs_gap =
          c - (s.Bring2 / n +
               std::abs(double(n - 2 * p)) * std::sqrt(s.Hnorm2) /
                   std::sqrt(double(n) * p * (n - p)) * std::sqrt(s.Bring2) -
               s.Hnorm2);
      if (std::abs(lhs_gap) < 1e-9 || std::abs(rhs_gap) < 1e-9) continue;  // boundary
      if ((lhs_gap > 0) != (rhs_gap > 0)) ++disagree;
    }
    out.push_back(residual_check("alpha-equivalence", {{"trials", double(cfg.trials)}},
                                 disagree, 0));
  }
  {  // eigensolver-based norm against a power-iteration oracle
    double worst = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const int n = rng.uniform_int(2, 10);
      const Eigen::MatrixXd A = rng.symmetric_matrix(n);
      const double via_eigen = spectral_norm(A);
      const double via_power = std::sqrt(detail::power_iteration_psd(A * A, rng));
      worst = std::max(worst, std::abs(via_eigen - via_power) /
                                  std::max(1.0, std::abs(via_eigen)));
    }
    out.push_back(residual_check("spectral-norm-oracle",
                                 {{"trials", double(cfg.trials)}}, worst, 1e-9));
  }
  return out;
}

// ---------------------------------------------------------------------------
// models: sharpness grid plus sphere spectra cross-checks

inline std::vector<CheckRecord> suite_models(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out = sharpness_suite();

  {  // umbilic bound reproduces the sphere spectrum exactly, every degree
    double worst = 0;
    for (int n = 2; n <= 8; ++n)
      for (int p = 1; p <= n - 1; ++p)
        for (auto [c, Hn] : {std::pair{0.0, 1.0}, {1.0, 0.0}, {0.5, 1.2}}) {
          const ModelSpaced M = geodesic_sphere<double>(n, 2, c, Hn);
          const double bound = thm11_bound(n, p, c, M.B);
          worst = std::max(worst, std::abs(bound - *M.spectrum[p].lambda_exact));
        }
    out.push_back(residual_check("sphere-bound-spectrum", {{"nmax", 8}}, worst, 1e-12));
  }
  {  // spectrum table duality lambda_{1,q} = lambda_{1,n-q}
    double worst = 0;
    for (int n = 2; n <= 8; ++n) {
      const ModelSpaced M = geodesic_sphere<double>(n, 1, 1.0, 0.5);
      for (int q = 0; q <= n; ++q)
        worst = std::max(worst,
                         std::abs(*M.spectrum[q].lambda_first -
                                  *M.spectrum[n - q].lambda_first));
    }
    out.push_back(residual_check("sphere-spectrum-duality", {{"nmax", 8}}, worst, 1e-12));
  }
  {  // intrinsic curvature of the sphere model is constant c + |H|^2
    double worst = 0;
    for (int n = 2; n <= 6; ++n) {
      const double c = 0.5, Hn = 1.2;
      const ModelSpaced M = geodesic_sphere<double>(n, 3, c, Hn);
      const CurvatureTensord expect = constant_curvature(n, c + Hn * Hn);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
              worst = std::max(worst, std::abs(M.intrinsic(i, j, k, l) - expect(i, j, k, l)));
    }
    out.push_back(residual_check("sphere-gauss-constant", {{"nmax", 6}}, worst, 1e-12));
  }
  {  // Gallot-Meyer applied to the sphere's Bochner constant
    double worst = 0;
    for (int n = 2; n <= 8; ++n)
      for (int p = 1; p <= n - 1; ++p) {
        const double kappa = 1.25;
        const int d = std::min(p, n - p);
        worst = std::max(worst, std::abs(gallot_meyer_bound(n, p, kappa) -
                                         d * (n - d + 1) * kappa));
      }
    out.push_back(residual_check("gallot-meyer-table", {{"nmax", 8}}, worst, 0));
  }
  {  // torus harmonic degrees recorded with zero eigenvalue
    int bad = 0;
    for (int n : {4, 6})
      for (int p = 1; p <= n - 1; ++p) {
        const ModelSpaced M = clifford_torus<double>(n, p, 2.0);
        bool found_p = false, found_q = false;
        for (const auto& e : M.spectrum) {
          if (e.q == p && e.lambda_first && *e.lambda_first == 0.0) found_p = true;
          if (e.q == n - p && e.lambda_first && *e.lambda_first == 0.0) found_q = true;
        }
        const bool betti_ok =
            std::count(M.betti_positive.begin(), M.betti_positive.end(), p) == 1 &&
            std::count(M.betti_positive.begin(), M.betti_positive.end(), n - p) == 1;
        if (!found_p || !found_q || !betti_ok) ++bad;
      }
    out.push_back(residual_check("torus-harmonic-degrees", {}, bad, 0));
  }
  {  // the cross-module equality grid at the balanced torus
    const ModelSpaced M = clifford_torus<double>(4, 2, 1.0);
    const ExtrinsicSummary<double> s = summarize(M.B);
    double worst = std::abs(thm11_bound(4, 2, 1.0, M.B));
    const auto cb = cor12_bounds(4, 2, 1.0, M.B);
    worst = std::max(worst, std::abs(cb.i));
    worst = std::max(worst, std::abs(cb.ii));
    worst = std::max(worst, std::abs(*cb.iii));
    worst = std::max(worst, std::abs(thm15_bound(4, 2, 1.0, 1.0,
                                                 ricci_min(M.intrinsic), s.Hnorm2)));
    worst = std::max(worst, std::abs(s.B2 - 4.0));
    worst = std::max(worst, std::abs(alpha_threshold(4, 2, 1.0, 0.0) - 4.0));
    worst = std::max(worst,
                     std::abs(ejiri_threshold(4, 2, 1.0, 1.0, s.Hnorm2) - 2.0));
    worst = std::max(worst, std::abs(ricci_min(M.intrinsic) - 2.0));
    worst = std::max(worst, std::abs(curvature_operator_min_eigenvalue(M.intrinsic)));
    out.push_back(residual_check("balanced-torus-equalities", {{"n", 4}, {"p", 2}},
                                 worst, 1e-10));
  }
  return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckRecord> run_suites(const std::string& name, const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  auto append = [&out](std::vector<CheckRecord> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  if (name == "algebra") append(suite_algebra(cfg));
  else if (name == "curvature") append(suite_curvature(cfg));
  else if (name == "identities") append(suite_identities(cfg));
  else if (name == "inequalities") append(suite_inequalities(cfg));
  else if (name == "models") append(suite_models(cfg));
  else if (name == "all") {
    append(suite_algebra(cfg));
    append(suite_curvature(cfg));
    append(suite_identities(cfg));
    append(suite_inequalities(cfg));
    append(suite_models(cfg));
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return out;
}

}  // namespace hodgebound
