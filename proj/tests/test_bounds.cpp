#include <doctest.h>

#include <Eigen/Dense>

#include "hodgebound/bounds.hpp"
#include "hodgebound/models.hpp"
#include "hodgebound/rng.hpp"

using namespace hodgebound;

namespace {
SecondFundamentalFormd clifford_pattern() {
  return principal_sff(Eigen::VectorXd(Eigen::Vector4d(1, 1, -1, -1)));
}

SecondFundamentalFormd umbilic(int n, double hval) {
  SecondFundamentalFormd B;
  B.n = n;
  B.m = 1;
  B.h = {Eigen::MatrixXd(hval * Eigen::MatrixXd::Identity(n, n))};
  return B;
}
}  // namespace

TEST_CASE("spectral norm") {
  Eigen::Matrix3d D = Eigen::Vector3d(1, -2, 3).asDiagonal();
  CHECK(spectral_norm(D) == doctest::Approx(3.0));
  D(2, 2) = -5;
  CHECK(spectral_norm(D) == doctest::Approx(5.0));
  Eigen::Matrix3d A = Eigen::Matrix3d::Zero();
  A(0, 1) = 1.0;
  CHECK_THROWS_AS(spectral_norm(A), std::invalid_argument);
  CHECK_THROWS_AS(spectral_norm(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("stacked operator norm returns the square") {
  Eigen::MatrixXd A = Eigen::Vector2d(1, 2).asDiagonal();
  CHECK(stacked_opnorm<double>({A}) == doctest::Approx(4.0));
  // two copies double the Gram sum
  CHECK(stacked_opnorm<double>({A, A}) == doctest::Approx(8.0));
  CHECK_THROWS_AS(stacked_opnorm<double>({}), std::invalid_argument);
}

TEST_CASE("uniform curvature-term bound") {
  CHECK(gallot_meyer_bound(3, 1, 2.0) == doctest::Approx(6.0));
  CHECK(gallot_meyer_bound(4, 2, 0.0) == 0.0);
  CHECK(gallot_meyer_bound(6, 2, 1.0) == doctest::Approx(10.0));
  CHECK(gallot_meyer_bound(6, 4, 1.0) == doctest::Approx(10.0));  // evaluated at min(p, n-p)
  CHECK_THROWS_AS(gallot_meyer_bound(4, 0, 1.0), std::invalid_argument);
}

TEST_CASE("first-eigenvalue bound: umbilic and balanced cases") {
  // umbilic: p(n-p+1)(c + |H|^2) at the literal degree
  for (int n = 3; n <= 8; ++n)
    for (int p = 1; p <= n - 1; ++p)
      CHECK(thm11_bound(n, p, 1.0, umbilic(n, 0.0)) == doctest::Approx(p * (n - p + 1)));
  CHECK(thm11_bound(4, 3, 2.0, umbilic(4, 1.0)) == doctest::Approx(3 * 2 * (2.0 + 1.0)));
  // balanced pattern in the unit sphere: gamma_2 = -1 cancels c = 1
  CHECK(thm11_bound(4, 2, 1.0, clifford_pattern()) == doctest::Approx(0.0));
  // degrees above n/2 reduce to the dual degree
  Rng rng(37);
  SecondFundamentalFormd B;
  B.n = 5;
  B.m = 2;
  B.h = {rng.symmetric_matrix(5), rng.symmetric_matrix(5)};
  CHECK(thm11_bound(5, 4, 0.3, B) == doctest::Approx(thm11_bound(5, 1, 0.3, B)));
  CHECK_THROWS_AS(thm11_bound(4, 4, 1.0, B), std::invalid_argument);
}

TEST_CASE("weakened bounds and the interpolating family") {
  const Cor12Bounds<double> cb = cor12_bounds(4, 2, 1.0, clifford_pattern());
  CHECK(cb.i == doctest::Approx(0.0));
  CHECK(cb.ii == doctest::Approx(0.0));
  REQUIRE(cb.iii.has_value());
  CHECK(*cb.iii == doctest::Approx(0.0));
  CHECK(cb.eps == doctest::Approx(0.0));
  CHECK(cb.degree == 2);
  CHECK_FALSE(cb.duality_reduced);

  // eps = 0 reproduces the traceless-norm form
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    const int n = rng.uniform_int(3, 7);
    const int p = rng.uniform_int(1, n - 1);
    SecondFundamentalFormd B;
    B.n = n;
    B.m = 1;
    B.h = {rng.symmetric_matrix(n)};
    const Cor12Bounds<double> b = cor12_bounds(n, p, 0.5, B, 0.0);
    CHECK(b.eps == doctest::Approx(b.i).epsilon(1e-12));
    if (n % 2 != 0 || p != n / 2) CHECK_FALSE(b.iii.has_value());
  }
  CHECK_THROWS_AS(cor12_bounds(4, 2, 1.0, clifford_pattern(), -1.0),
                  std::invalid_argument);
}

TEST_CASE("norm-pinching betti threshold") {
  CHECK(alpha_threshold(4, 1, 1.0, 0.5) == doctest::Approx(4.0));
  CHECK(alpha_threshold(4, 2, 1.0, 0.0) == doctest::Approx(4.0));
  // middle degree kills the |n-2p| term entirely
  CHECK(alpha_threshold(6, 3, 2.0, 1.7) ==
        doctest::Approx(6 * 2.0 + 216.0 * 1.7 * 1.7 / 18.0));
  CHECK_THROWS_AS(alpha_threshold(4, 1, -0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(alpha_threshold(4, 0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("ricci pinch denominator") {
  CHECK(ricci_pinch_denominator(4, 2) == 8);
  CHECK(ricci_pinch_denominator(5, 2) == 17);
  CHECK(ricci_pinch_denominator(3, 1) == 1);
  CHECK(ricci_pinch_denominator(2, 1) == 0);
}

TEST_CASE("ricci-based eigenvalue bound") {
  // balanced pattern sits exactly on the threshold: bound 0
  CHECK(thm15_bound(4, 2, 1.0, 1.0, 2.0, 0.0) == doctest::Approx(0.0));
  // minimal sphere in the unit sphere: Ric = n-1, bound collapses per degree
  CHECK(thm15_bound(4, 1, 1.0, 1.0, 3.0, 0.0) ==
        doctest::Approx((4.0 / 3.0) * (2.0 / 2.0) * (3.0 - 3.0 + 3.0)));
  CHECK_THROWS_AS(thm15_bound(2, 1, 0.0, 0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(thm15_bound(4, 3, 0.0, 0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(thm15_bound(4, 2, 1.0, 0.5, 1.0, 0.0), std::invalid_argument);

  const BoundReport r = thm15_report(5, 4, 0.0, 0.0, 4.0, 0.1);
  CHECK(r.applicable);
  CHECK(r.duality_reduced);
  CHECK(r.value == doctest::Approx(thm15_bound(5, 1, 0.0, 0.0, 4.0, 0.1)));
  CHECK_FALSE(thm15_report(4, 2, 1.0, 0.5, 1.0, 0.0).applicable);
}

TEST_CASE("topology thresholds") {
  CHECK(ejiri_threshold(4, 2, 1.0, 1.0, 0.0) == doctest::Approx(2.0));
  CHECK(ejiri_threshold(5, 2, 1.0, 1.0, 0.0) == doctest::Approx(50.0 / 17.0));
  CHECK_THROWS_AS(ejiri_threshold(4, 2, 1.0, 0.0, 0.0), std::invalid_argument);

  // even n: the worst degree gives factor one
  CHECK(homology_sphere_threshold(4, 1.0, 1.0, 0.0) == doctest::Approx(2.0));
  CHECK(homology_sphere_threshold(6, 1.0, 1.0, 0.5) == doctest::Approx(4.0 * 1.5));
  // odd n closed form; matches the worst-degree evaluation
  CHECK(homology_sphere_threshold(5, 1.0, 1.0, 0.0) == doctest::Approx(50.0 / 17.0));
  for (int n = 3; n <= 10; ++n) {
    double worst = -1e300;
    for (int p = 1; p <= n - 1; ++p)
      if (ricci_pinch_denominator(n, p) > 0)
        worst = std::max(worst, ejiri_threshold(n, p, 1.0, 1.0, 0.3));
    CHECK(homology_sphere_threshold(n, 1.0, 1.0, 0.3) == doctest::Approx(worst));
  }

  CHECK(stable_current_threshold(4, 2, 1.0, 0.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(stable_current_threshold(4, 1, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(stable_current_threshold(4, 2, -1.0, 0.0), std::domain_error);
  CHECK(stable_current_threshold_p1(4, 1.0, 0.0) == doctest::Approx(2.0));
  CHECK(stable_current_threshold_p1(5, 1.0, 0.2) == doctest::Approx(20.0 * 1.2 / 7.0));

  CHECK(bring2_threshold(4, 2, 1.0) == doctest::Approx(4.0));
  CHECK(b2_threshold(4, 2, 1.0) == doctest::Approx(4.0));
  CHECK(b2_threshold(5, 2, 1.0) == doctest::Approx(2.0 * std::sqrt(6.0)));
}

TEST_CASE("threshold report rows") {
  const auto rows = sphere_theorem_thresholds(4, 2, 1.0, 1.0, 0.0);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].name == "ejiri-ricci");
  CHECK(rows[0].value == doctest::Approx(2.0));
  CHECK(rows[5].name == "b2-threshold");
  for (const auto& r : rows) CHECK(r.applicable);

  // two-sided ambient: single-constant rows become not-applicable
  const auto two = sphere_theorem_thresholds(4, 2, 0.5, 1.0, 0.0);
  CHECK(two[0].applicable);       // ejiri handles a pinched range
  CHECK(two[1].applicable);       // homology-sphere too
  CHECK_FALSE(two[2].applicable);
  CHECK_FALSE(two[3].applicable);
  CHECK_FALSE(two[4].applicable);
  CHECK_FALSE(two[5].applicable);
}

TEST_CASE("derivation extension norm inequality") {
  Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.uniform_int(2, 6);
    const int p = rng.uniform_int(1, n - 1);
    const int m = rng.uniform_int(1, 3);
    std::vector<Eigen::MatrixXd> A;
    for (int a = 0; a < m; ++a) A.push_back(rng.symmetric_matrix(n));
    CHECK(lemma42_check(A, p, rng.form(n, p)).holds);
  }
  // degree-one saturation at a top eigenvector of A^2
  const Eigen::MatrixXd A = rng.symmetric_matrix(5);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(A * A));
  const PFormd w(5, 1, es.eigenvectors().col(4));
  const auto chk = lemma42_check<double>({A}, 1, w);
  CHECK(chk.lhs == doctest::Approx(chk.rhs).epsilon(1e-10));
  CHECK_THROWS_AS(lemma42_check<double>({}, 1, w), std::invalid_argument);
}

TEST_CASE("operator-norm chain behind the ricci bound") {
  // balanced pattern: both sides equal 4
  const auto cliff = thm15_opnorm_chain(clifford_pattern(), 2);
  CHECK(cliff.lhs == doctest::Approx(4.0));
  CHECK(cliff.rhs == doctest::Approx(4.0));
  CHECK(cliff.holds);
  // umbilic: both sides collapse to -p(n-p)|H|^2
  const auto umb = thm15_opnorm_chain(umbilic(5, 0.7), 2);
  CHECK(umb.lhs == doctest::Approx(-6 * 0.49));
  CHECK(umb.rhs == doctest::Approx(-6 * 0.49));
  // random inputs never violate the chain
  Rng rng(47);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.uniform_int(3, 6);
    const int p = rng.uniform_int(1, n / 2);
    const int m = rng.uniform_int(1, 3);
    SecondFundamentalFormd B;
    B.n = n;
    B.m = m;
    for (int a = 0; a < m; ++a) B.h.push_back(rng.symmetric_matrix(n));
    CHECK(thm15_opnorm_chain(B, p).holds);
  }
  CHECK_THROWS_AS(thm15_opnorm_chain(clifford_pattern(), 3), std::invalid_argument);
}

TEST_CASE("bound reports map precondition failures to not-applicable") {
  CHECK_FALSE(thm11_report(4, 0, 1.0, clifford_pattern()).applicable);
  CHECK(thm11_report(4, 2, 1.0, clifford_pattern()).applicable);
  CHECK(thm11_report(4, 2, 1.0, umbilic(4, 0.5)).note == "umbilic fast path");
  const auto cor = cor12_reports(4, 3, 1.0, clifford_pattern());
  REQUIRE(cor.size() == 4);
  CHECK(cor[2].name == "cor12-iii");
  CHECK_FALSE(cor[2].applicable);  // reduced degree 1 is not the middle degree
  CHECK_FALSE(alpha_report(4, 2, -1.0, 0.0).applicable);
  CHECK(alpha_report(4, 2, 1.0, 0.0).value == doctest::Approx(4.0));
}
