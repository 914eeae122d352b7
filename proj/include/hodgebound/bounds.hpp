#pragma once

// Closed-form eigenvalue lower bounds and topology thresholds, plus the
// operator-norm inequalities used to prove them.  Bound functions come in
// two layers: raw formulas (throwing on precondition violations) and
// BoundReport builders that map precondition failures to not-applicable.
//
// Degree convention: bounds stated for 1 <= p <= n/2 are evaluated at
// min(p, n-p) for larger p (the spectrum is degree-symmetric); reports
// carry a duality_reduced flag when that rerouting happened.

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hodgebound/forms.hpp"
#include "hodgebound/report.hpp"
#include "hodgebound/submanifold.hpp"

namespace hodgebound {

// ---------------------------------------------------------------------------
// Operator norms

// Largest-magnitude eigenvalue of a symmetric matrix.
template <typename Derived>
typename Derived::Scalar spectral_norm(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  if (A.rows() != A.cols()) throw std::invalid_argument("spectral_norm: not square");
  const MatrixX<Scalar> M = A;
  if ((M - M.transpose()).template lpNorm<Eigen::Infinity>() >
      Scalar(1e-12) * std::max(Scalar(1), M.template lpNorm<Eigen::Infinity>()))
    throw std::invalid_argument("spectral_norm: not symmetric");
  if (M.rows() == 0) return Scalar(0);
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(M);
  if (es.info() != Eigen::Success) throw std::runtime_error("spectral_norm: solver failed");
  return std::max(std::abs(es.eigenvalues()(0)),
                  std::abs(es.eigenvalues()(M.rows() - 1)));
}

// Squared operator norm of the stacked map v -> (A_1 v, ..., A_m v):
// largest eigenvalue of the Gram sum sum_a A_a^T A_a.  Note this is the
// SQUARE of the stacked norm; callers compare against squared bounds.
template <typename Scalar>
Scalar stacked_opnorm(const std::vector<MatrixX<Scalar>>& ops) {
  if (ops.empty()) throw std::invalid_argument("stacked_opnorm: empty list");
  const Eigen::Index d = ops.front().cols();
  MatrixX<Scalar> gram = MatrixX<Scalar>::Zero(d, d);
  for (const auto& A : ops) {
    if (A.cols() != d) throw std::invalid_argument("stacked_opnorm: column mismatch");
    gram += A.transpose() * A;
  }
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(gram);
  if (es.info() != Eigen::Success) throw std::runtime_error("stacked_opnorm: solver failed");
  return es.eigenvalues()(d - 1);
}

// ---------------------------------------------------------------------------
// Lower bounds

// lambda_{1,p} >= p(n-p+1) Lambda whenever W^[p] >= p(n-p) Lambda.
// Evaluated at min(p, n-p).
template <typename Scalar>
Scalar gallot_meyer_bound(int n, int p, Scalar bochner_constant) {
  if (p < 1 || p > n - 1)
    throw std::invalid_argument("gallot_meyer_bound: degree out of range");
  const int d = std::min(p, n - p);
  return Scalar(d * (n - d + 1)) * bochner_constant;
}

namespace detail {

// Relative umbilicity test: |Bring|^2 negligible against |B|^2.
template <typename Scalar>
bool is_umbilic(const ExtrinsicSummary<Scalar>& s) {
  return s.Bring2 <= Scalar(1e-24) * std::max(Scalar(1), s.B2);
}

}  // namespace detail

// Lower bound p(n-p+1)(c + gamma_p); umbilic inputs collapse to
// p(n-p+1)(c + |H|^2) at the literal degree (where it equals the geodesic
// sphere's first exact-form eigenvalue for every 1 <= p <= n-1).
template <typename Scalar>
Scalar thm11_bound(int n, int p, Scalar c, const SecondFundamentalForm<Scalar>& B) {
  if (p < 1 || p > n - 1)
    throw std::invalid_argument("thm11_bound: degree out of range");
  const ExtrinsicSummary<Scalar> s = summarize(B);
  if (detail::is_umbilic(s)) return Scalar(p * (n - p + 1)) * (c + s.Hnorm2);
  const int d = std::min(p, n - p);
  return Scalar(d * (n - d + 1)) * (c + gamma_p(B, d));
}

// The four weakened bounds: (i) traceless-norm form, (ii) full-norm form,
// (iii) middle-degree form (n even, p = n/2 only), and the one-parameter
// family over eps > -1 that interpolates them.
template <typename Scalar>
struct Cor12Bounds {
  Scalar i = 0;
  Scalar ii = 0;
  std::optional<Scalar> iii;  // engaged only for n even, p = n/2
  Scalar eps = 0;
  int degree = 0;  // degree the formulas were evaluated at
  bool duality_reduced = false;
};

template <typename Scalar>
Cor12Bounds<Scalar> cor12_bounds(int n, int p, Scalar c, const SecondFundamentalForm<Scalar>& B,
                                 Scalar eps = Scalar(0)) {
  if (p < 1 || p > n - 1)
    throw std::invalid_argument("cor12_bounds: degree out of range");
  if (!(eps > Scalar(-1))) throw std::invalid_argument("cor12_bounds: eps must exceed -1");
  const ExtrinsicSummary<Scalar> s = summarize(B);
  Cor12Bounds<Scalar> out;
  const int d = std::min(p, n - p);
  out.degree = d;
  out.duality_reduced = (d != p);
  const Scalar q = Scalar(d * (n - d));
  const Scalar lead = Scalar(d * (n - d + 1));
  out.i = lead * (c - Scalar(n) * s.Bring2 / (4 * q));
  out.ii = lead * (c - s.B2 / (2 * std::sqrt(q)));
  if (n % 2 == 0 && p == n / 2)
    out.iii = (Scalar(n) * (n + 2) / 4) * (c - s.Bring2 / Scalar(n) + s.Hnorm2);
  out.eps = lead * (c -
                    (Scalar(1) / (Scalar(n) * (1 + eps))) *
                        (Scalar(n) * n / (4 * q) + eps) * s.Bring2 -
                    eps * s.Hnorm2);
  return out;
}

// Betti-vanishing threshold for |B|^2:
// alpha = nc + n^3|H|^2/(2q) - n|n-2p||H| sqrt(n^2|H|^2 + 4cq)/(2q), q = p(n-p).
template <typename Scalar>
Scalar alpha_threshold(int n, int p, Scalar c, Scalar Hnorm) {
  if (p < 1 || p > n - 1)
    throw std::invalid_argument("alpha_threshold: degree out of range");
  if (c < Scalar(0)) throw std::domain_error("alpha_threshold: requires c >= 0");
  const Scalar q = Scalar(p * (n - p));
  return Scalar(n) * c + Scalar(n) * n * n * Hnorm * Hnorm / (2 * q) -
         Scalar(n) * std::abs(Scalar(n - 2 * p)) * Hnorm *
             std::sqrt(Scalar(n) * n * Hnorm * Hnorm + 4 * c * q) / (2 * q);
}

// Denominator shared by the Ricci-pinching results.
inline int ricci_pinch_denominator(int n, int p) { return (n + 2) * p * (n - p) - n * n; }

// Ricci-based lower bound
//   ((n-p+1)/(n-p)) (D/(n-2)) (Ric_min - (n-1)(c^u + |H|^2) + ((n-2)q/D)(c_l + |H|^2)),
// D = (n+2)p(n-p) - n^2, q = p(n-p).  Requires 1 <= p <= n/2, n >= 3, D > 0,
// c_upper >= c_lower.
template <typename Scalar>
Scalar thm15_bound(int n, int p, Scalar c_lower, Scalar c_upper, Scalar ric_min,
                   Scalar Hnorm2) {
  if (n < 3) throw std::invalid_argument("thm15_bound: requires n >= 3");
  if (p < 1 || 2 * p > n) throw std::invalid_argument("thm15_bound: requires 1 <= p <= n/2");
  if (c_upper < c_lower) throw std::invalid_argument("thm15_bound: requires c_upper >= c_lower");
  const int D = ricci_pinch_denominator(n, p);
  if (D <= 0) throw std::invalid_argument("thm15_bound: nonpositive denominator");
  const Scalar q = Scalar(p * (n - p));
  return (Scalar(n - p + 1) / Scalar(n - p)) * (Scalar(D) / Scalar(n - 2)) *
         (ric_min - Scalar(n - 1) * (c_upper + Hnorm2) +
          (Scalar(n - 2) * q / Scalar(D)) * (c_lower + Hnorm2));
}

// ---------------------------------------------------------------------------
// Reports

struct BoundReport {
  std::string name;
  NamedValues inputs;
  bool applicable = true;
  double value = std::numeric_limits<double>::quiet_NaN();
  std::optional<bool> holds;  // set when a comparison target was supplied
  bool duality_reduced = false;
  std::string note;
};

inline BoundReport not_applicable_report(std::string name, NamedValues inputs,
                                         std::string note) {
  BoundReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.applicable = false;
  r.note = std::move(note);
  return r;
}

inline BoundReport thm11_report(int n, int p, double c, const SecondFundamentalFormd& B) {
  NamedValues in{{"n", double(n)}, {"p", double(p)}, {"c", c}};
  if (p < 1 || p > n - 1)
    return not_applicable_report("thm11", std::move(in), "requires 1 <= p <= n-1");
  BoundReport r;
  r.name = "thm11";
  r.inputs = std::move(in);
  r.value = thm11_bound(n, p, c, B);
  const ExtrinsicSummary<double> s = summarize(B);
  if (detail::is_umbilic(s)) r.note = "umbilic fast path";
  else r.duality_reduced = (p > n - p);
  return r;
}

inline std::vector<BoundReport> cor12_reports(int n, int p, double c,
                                              const SecondFundamentalFormd& B,
                                              double eps = 0.0) {
  NamedValues in{{"n", double(n)}, {"p", double(p)}, {"c", c}, {"eps", eps}};
  std::vector<BoundReport> out;
  if (p < 1 || p > n - 1) {
    for (const char* name : {"cor12-i", "cor12-ii", "cor12-iii", "cor12-eps"})
      out.push_back(not_applicable_report(name, in, "requires 1 <= p <= n-1"));
    return out;
  }
  const Cor12Bounds<double> b = cor12_bounds(n, p, c, B, eps);
  auto mk = [&](const char* name, double value) {
    BoundReport r;
    r.name = name;
    r.inputs = in;
    r.value = value;
    r.duality_reduced = b.duality_reduced;
    return r;
  };
  out.push_back(mk("cor12-i", b.i));
  out.push_back(mk("cor12-ii", b.ii));
  if (b.iii) out.push_back(mk("cor12-iii", *b.iii));
  else out.push_back(not_applicable_report("cor12-iii", in, "requires n even and p = n/2"));
  out.push_back(mk("cor12-eps", b.eps));
  return out;
}

inline BoundReport alpha_report(int n, int p, double c, double Hnorm) {
  NamedValues in{{"n", double(n)}, {"p", double(p)}, {"c", c}, {"Hnorm", Hnorm}};
  if (p < 1 || p > n - 1)
    return not_applicable_report("alpha-threshold", std::move(in), "requires 1 <= p <= n-1");
  if (c < 0)
    return not_applicable_report("alpha-threshold", std::move(in), "requires c >= 0");
  BoundReport r;
  r.name = "alpha-threshold";
  r.inputs = std::move(in);
  r.value = alpha_threshold(n, p, c, Hnorm);
  return r;
}

inline BoundReport thm15_report(int n, int p, double c_lower, double c_upper, double ric_min,
                                double Hnorm2) {
  NamedValues in{{"n", double(n)},      {"p", double(p)},          {"c_lower", c_lower},
                 {"c_upper", c_upper},  {"ric_min", ric_min},      {"Hnorm2", Hnorm2}};
  if (n < 3) return not_applicable_report("thm15", std::move(in), "requires n >= 3");
  if (c_upper < c_lower)
    return not_applicable_report("thm15", std::move(in), "requires c_upper >= c_lower");
  int d = p;
  bool reduced = false;
  if (p < 1 || p > n - 1)
    return not_applicable_report("thm15", std::move(in), "requires 1 <= p <= n-1");
  if (2 * p > n) {
    d = n - p;
    reduced = true;
  }
  if (ricci_pinch_denominator(n, d) <= 0)
    return not_applicable_report("thm15", std::move(in), "nonpositive denominator");
  BoundReport r;
  r.name = "thm15";
  r.inputs = std::move(in);
  r.value = thm15_bound(n, d, c_lower, c_upper, ric_min, Hnorm2);
  r.duality_reduced = reduced;
  return r;
}

// ---------------------------------------------------------------------------
// Topology thresholds (Ricci pinching and norm pinching)

// Ricci threshold (n-1)(c^u + |H|^2) - ((n-2)q/D)(c_l + |H|^2): Ricci above
// it kills the p-th betti number.
template <typename Scalar>
Scalar ejiri_threshold(int n, int p, Scalar c_lower, Scalar c_upper, Scalar Hnorm2) {
  if (n < 3) throw std::invalid_argument("ejiri_threshold: requires n >= 3");
  if (p < 1 || p > n - 1)
    throw std::invalid_argument("ejiri_threshold: degree out of range");
  if (c_upper < c_lower)
    throw std::invalid_argument("ejiri_threshold: requires c_upper >= c_lower");
  const int D = ricci_pinch_denominator(n, p);
  if (D <= 0) throw std::invalid_argument("ejiri_threshold: nonpositive denominator");
  const Scalar q = Scalar(p * (n - p));
  return Scalar(n - 1) * (c_upper + Hnorm2) -
         (Scalar(n - 2) * q / Scalar(D)) * (c_lower + Hnorm2);
}

// Homology-sphere Ricci threshold: the worst degree of ejiri_threshold in
// closed form, split by parity of n.
template <typename Scalar>
Scalar homology_sphere_threshold(int n, Scalar c_lower, Scalar c_upper, Scalar Hnorm2) {
  if (n < 3) throw std::invalid_argument("homology_sphere_threshold: requires n >= 3");
  if (c_upper < c_lower)
    throw std::invalid_argument("homology_sphere_threshold: requires c_upper >= c_lower");
  if (n % 2 == 0) return Scalar(n - 1) * (c_upper + Hnorm2) - (c_lower + Hnorm2);
  const Scalar factor =
      Scalar(n - 2) * (Scalar(n) * n - 1) /
      (Scalar(n) * n * n - 2 * Scalar(n) * n - Scalar(n) - 2);
  return Scalar(n - 1) * (c_upper + Hnorm2) - factor * (c_lower + Hnorm2);
}

// Weak-Ricci threshold for nonexistence of stable p-currents,
// (n-1 - (n-2)q/D)(c + |H|^2); constant-curvature ambient, c >= 0,
// n >= 4, 1 < p < n-1.
template <typename Scalar>
Scalar stable_current_threshold(int n, int p, Scalar c, Scalar Hnorm2) {
  if (n < 4) throw std::invalid_argument("stable_current_threshold: requires n >= 4");
  if (p < 2 || p > n - 2)
    throw std::invalid_argument("stable_current_threshold: requires 1 < p < n-1");
  if (c < Scalar(0)) throw std::domain_error("stable_current_threshold: requires c >= 0");
  const int D = ricci_pinch_denominator(n, p);
  const Scalar q = Scalar(p * (n - p));
  return (Scalar(n - 1) - Scalar(n - 2) * q / Scalar(D)) * (c + Hnorm2);
}

// p = 1 companion of the above: Ric > n(n-1)(c+|H|^2)/(n+2) rules out
// stable 1-currents.
template <typename Scalar>
Scalar stable_current_threshold_p1(int n, Scalar c, Scalar Hnorm2) {
  if (n < 2) throw std::invalid_argument("stable_current_threshold_p1: requires n >= 2");
  if (c < Scalar(0))
    throw std::domain_error("stable_current_threshold_p1: requires c >= 0");
  return Scalar(n) * (n - 1) * (c + Hnorm2) / Scalar(n + 2);
}

// |Bring|^2 and |B|^2 pinching thresholds below which b_p vanishes.
template <typename Scalar>
Scalar bring2_threshold(int n, int p, Scalar c) {
  if (p < 1 || p > n - 1) throw std::invalid_argument("bring2_threshold: degree out of range");
  return 4 * c * Scalar(p * (n - p)) / Scalar(n);
}

template <typename Scalar>
Scalar b2_threshold(int n, int p, Scalar c) {
  if (p < 1 || p > n - 1) throw std::invalid_argument("b2_threshold: degree out of range");
  return 2 * c * std::sqrt(Scalar(p * (n - p)));
}

// All six thresholds as reports.  Single-ambient-constant thresholds are
// not-applicable when c_lower != c_upper.
inline std::vector<BoundReport> sphere_theorem_thresholds(int n, int p, double c_lower,
                                                          double c_upper, double Hnorm2) {
  NamedValues in{{"n", double(n)},
                 {"p", double(p)},
                 {"c_lower", c_lower},
                 {"c_upper", c_upper},
                 {"Hnorm2", Hnorm2}};
  std::vector<BoundReport> out;
  auto mk = [&](const char* name, double value, std::string note = {}) {
    BoundReport r;
    r.name = name;
    r.inputs = in;
    r.value = value;
    r.note = std::move(note);
    return r;
  };
  const bool single_c = (c_lower == c_upper);

  if (n >= 3 && p >= 1 && p <= n - 1 && c_upper >= c_lower &&
      ricci_pinch_denominator(n, p) > 0)
    out.push_back(mk("ejiri-ricci", ejiri_threshold(n, p, c_lower, c_upper, Hnorm2)));
  else
    out.push_back(not_applicable_report("ejiri-ricci", in,
                                        "requires n >= 3, 1 <= p <= n-1, c_upper >= c_lower"));

  if (n >= 3 && c_upper >= c_lower)
    out.push_back(mk("homology-sphere-ricci",
                     homology_sphere_threshold(n, c_lower, c_upper, Hnorm2),
                     "degree-independent"));
  else
    out.push_back(not_applicable_report("homology-sphere-ricci", in,
                                        "requires n >= 3 and c_upper >= c_lower"));

  if (single_c && n >= 4 && p >= 2 && p <= n - 2 && c_lower >= 0)
    out.push_back(mk("stable-current", stable_current_threshold(n, p, c_lower, Hnorm2)));
  else
    out.push_back(not_applicable_report(
        "stable-current", in, "requires single ambient c >= 0, n >= 4, 1 < p < n-1"));

  if (single_c && c_lower >= 0)
    out.push_back(mk("stable-current-p1", stable_current_threshold_p1(n, c_lower, Hnorm2),
                     "degree 1 only"));
  else
    out.push_back(
        not_applicable_report("stable-current-p1", in, "requires single ambient c >= 0"));

  if (single_c && p >= 1 && p <= n - 1)
    out.push_back(mk("bring2-threshold", bring2_threshold(n, p, c_lower)));
  else
    out.push_back(not_applicable_report("bring2-threshold", in,
                                        "requires single ambient c, 1 <= p <= n-1"));

  if (single_c && p >= 1 && p <= n - 1)
    out.push_back(mk("b2-threshold", b2_threshold(n, p, c_lower)));
  else
    out.push_back(not_applicable_report("b2-threshold", in,
                                        "requires single ambient c, 1 <= p <= n-1"));
  return out;
}

// ---------------------------------------------------------------------------
// Inequality checks with brute-force evaluation on both sides

template <typename Scalar>
struct InequalityCheck {
  Scalar lhs = 0;
  Scalar rhs = 0;
  bool holds = false;
};

// sum_a |ext(A^a, p) w|^2  <=  p^2 |sum_a (A^a)^2|_2 |w|^2.
template <typename Scalar>
InequalityCheck<Scalar> lemma42_check(const std::vector<MatrixX<Scalar>>& A, int p,
                                      const PForm<Scalar>& w, Scalar tol = Scalar(1e-9)) {
  if (A.empty()) throw std::invalid_argument("lemma42_check: empty operator list");
  const int n = static_cast<int>(A.front().rows());
  InequalityCheck<Scalar> out;
  MatrixX<Scalar> sq = MatrixX<Scalar>::Zero(n, n);
  for (const auto& Aa : A) {
    out.lhs += (derivation_extend(Aa, p).entries() * w.coeffs()).squaredNorm();
    sq += Aa * Aa;
  }
  out.rhs = Scalar(p) * p * spectral_norm(sq) * w.squared_norm();
  out.holds = out.lhs <= out.rhs + tol;
  return out;
}

// Operator-norm chain behind the Ricci-based bound:
//   lhs = |stacked (S_ring^a - ((n-2p)/2) H^a)|^2_op on p-forms - n^2|H|^2/4
//   rhs = (D/(n-2)) (|sum_a (A_ring^a - ((n-2)/2) H^a)^2|_2 - (n-2)^2|H|^2/4)
//         - p(n-p)|H|^2.
template <typename Scalar>
InequalityCheck<Scalar> thm15_opnorm_chain(const SecondFundamentalForm<Scalar>& B, int p,
                                           Scalar tol = Scalar(1e-9)) {
  const int n = B.n;
  if (n < 3) throw std::invalid_argument("thm15_opnorm_chain: requires n >= 3");
  if (p < 1 || 2 * p > n)
    throw std::invalid_argument("thm15_opnorm_chain: requires 1 <= p <= n/2");
  const ExtrinsicSummary<Scalar> s = summarize(B);
  const Index dim = binomial(n, p);

  std::vector<MatrixX<Scalar>> stacked;
  MatrixX<Scalar> gram_tangent = MatrixX<Scalar>::Zero(n, n);
  for (int a = 0; a < B.m; ++a) {
    const MatrixX<Scalar> ring = B.h[a] - s.H[a] * MatrixX<Scalar>::Identity(n, n);
    stacked.push_back(derivation_extend(ring, p).entries() -
                      (Scalar(n - 2 * p) / 2) * s.H[a] *
                          MatrixX<Scalar>::Identity(dim, dim));
    const MatrixX<Scalar> shifted =
        ring - (Scalar(n - 2) / 2) * s.H[a] * MatrixX<Scalar>::Identity(n, n);
    gram_tangent += shifted * shifted;
  }

  InequalityCheck<Scalar> out;
  out.lhs = stacked_opnorm(stacked) - (Scalar(n) * n / 4) * s.Hnorm2;
  const Scalar D = Scalar(ricci_pinch_denominator(n, p));
  out.rhs = (D / Scalar(n - 2)) *
                (spectral_norm(gram_tangent) - (Scalar(n - 2) * (n - 2) / 4) * s.Hnorm2) -
            Scalar(p * (n - p)) * s.Hnorm2;
  out.holds = out.lhs <= out.rhs + tol;
  return out;
}

}  // namespace hodgebound
