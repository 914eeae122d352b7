#include <doctest.h>

#include <Eigen/Dense>

#include "hodgebound/forms.hpp"
#include "hodgebound/rng.hpp"

using namespace hodgebound;

TEST_CASE("p-form shape checks") {
  CHECK_THROWS_AS(PFormd(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(PFormd(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(PFormd(3, 2, Eigen::VectorXd::Zero(2)), std::invalid_argument);
  const PFormd w = PFormd::basis_element(3, 0b011);
  CHECK(w.degree() == 2);
  CHECK(w.dim() == 3);
  CHECK(w.coeff(0b011) == 1.0);
  CHECK(w.coeff(0b101) == 0.0);
}

TEST_CASE("interior product on a frame 2-form") {
  // iota_{e_0}(eta^0 ^ eta^1) = eta^1 and iota_{e_1}(eta^0 ^ eta^1) = -eta^0
  const PFormd w = PFormd::basis_element(2, 0b11);
  const PFormd a = interior(0, w);
  CHECK(a.degree() == 1);
  CHECK(a.coeff(0b10) == 1.0);
  CHECK(a.coeff(0b01) == 0.0);
  const PFormd b = interior(1, w);
  CHECK(b.coeff(0b01) == -1.0);
  CHECK(b.coeff(0b10) == 0.0);
  CHECK_THROWS_AS(interior(2, w), std::invalid_argument);
  // zero on scalars by convention
  CHECK(interior(0, PFormd(2, 0)).degree() == 0);
}

TEST_CASE("interior product with a general vector matches the frame expansion") {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const int n = rng.uniform_int(1, 6);
    const int p = rng.uniform_int(1, n);
    const PFormd w = rng.form(n, p);
    const Eigen::VectorXd X = rng.vector(n);
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(binomial(n, p - 1));
    for (int k = 0; k < n; ++k) sum += X(k) * interior(k, w).coeffs();
    CHECK((interior(X, w).coeffs() - sum).lpNorm<Eigen::Infinity>() < 1e-14);
  }
}

TEST_CASE("wedge on basis elements") {
  const PFormd e0 = PFormd::basis_element(3, 0b001);
  const PFormd e1 = PFormd::basis_element(3, 0b010);
  const PFormd e2 = PFormd::basis_element(3, 0b100);
  CHECK(wedge(e0, e1).coeff(0b011) == 1.0);
  CHECK(wedge(e1, e0).coeff(0b011) == -1.0);
  CHECK(wedge(wedge(e0, e1), e2).coeff(0b111) == 1.0);
  CHECK(wedge(e0, e0).coeffs().norm() == 0.0);
  // degree overflow yields the zero top form
  const PFormd top = wedge(wedge(e0, e1), wedge(e2, e0));
  CHECK(top.degree() == 3);
  CHECK(top.coeffs().norm() == 0.0);
  CHECK_THROWS_AS(wedge(e0, PFormd(4, 1)), std::invalid_argument);
}

TEST_CASE("inner product is the coefficient dot product") {
  const PFormd w(3, 1, Eigen::Vector3d(1, 2, 3));
  const PFormd t(3, 1, Eigen::Vector3d(4, -5, 6));
  CHECK(form_inner(w, t) == 12.0);
  CHECK(w.squared_norm() == 14.0);
  CHECK_THROWS_AS(form_inner(w, PFormd(3, 2)), std::invalid_argument);
}

TEST_CASE("hodge star on pinned examples") {
  // n = 3: star(eta^0) = eta^{1,2}, star(eta^1) = -eta^{0,2}, star(eta^2) = eta^{0,1}
  CHECK(hodge_star(PFormd::basis_element(3, 0b001)).coeff(0b110) == 1.0);
  CHECK(hodge_star(PFormd::basis_element(3, 0b010)).coeff(0b101) == -1.0);
  CHECK(hodge_star(PFormd::basis_element(3, 0b100)).coeff(0b011) == 1.0);
  // star(1) is the volume form, star of the volume form is 1
  CHECK(hodge_star(PFormd(3, 0, Eigen::VectorXd::Ones(1))).coeff(0b111) == 1.0);
  CHECK(hodge_star(PFormd::basis_element(3, 0b111)).coeff(0) == 1.0);
}

TEST_CASE("hodge star involution sign and isometry") {
  Rng rng(5);
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) {
      const PFormd w = rng.form(n, p);
      const PFormd ss = hodge_star(hodge_star(w));
      const double sign = (p * (n - p)) % 2 ? -1.0 : 1.0;
      CHECK((ss.coeffs() - sign * w.coeffs()).lpNorm<Eigen::Infinity>() < 1e-15);
      CHECK(hodge_star(w).squared_norm() == doctest::Approx(w.squared_norm()));
    }
}

TEST_CASE("interior is adjoint to left wedge") {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.uniform_int(1, 6);
    const int p = rng.uniform_int(1, n);
    const int k = rng.uniform_int(0, n - 1);
    const PFormd w = rng.form(n, p - 1);
    const PFormd z = rng.form(n, p);
    const PFormd ek = PFormd::basis_element(n, Mask(1) << k);
    CHECK(form_inner(wedge(ek, w), z) ==
          doctest::Approx(form_inner(w, interior(k, z))).epsilon(1e-12));
  }
}

TEST_CASE("derivation extension of a diagonal endomorphism") {
  // diag(1,2,3) on Lambda^2 R^3 acts as diag(3,4,5) over {01, 02, 12}
  Eigen::Matrix3d A = Eigen::Vector3d(1, 2, 3).asDiagonal();
  const Eigen::MatrixXd ext = derivation_extend(A, 2).entries();
  Eigen::Matrix3d want = Eigen::Vector3d(3, 4, 5).asDiagonal();
  CHECK((ext - want).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("derivation extension basics") {
  Rng rng(11);
  const int n = 5;
  const Eigen::MatrixXd A = rng.symmetric_matrix(n);
  // restriction to degree 1 is the endomorphism itself
  CHECK((derivation_extend(A, 1).entries() - A).lpNorm<Eigen::Infinity>() == 0.0);
  // identity extends to p * Id
  for (int p = 0; p <= n; ++p) {
    const Eigen::MatrixXd extId =
        derivation_extend(Eigen::MatrixXd::Identity(n, n), p).entries();
    const Index d = binomial(n, p);
    CHECK((extId - double(p) * Eigen::MatrixXd::Identity(d, d)).lpNorm<Eigen::Infinity>() ==
          0.0);
  }
  // Leibniz rule against the wedge product
  for (int t = 0; t < 25; ++t) {
    const int p = rng.uniform_int(1, 2), q = rng.uniform_int(1, 2);
    const PFormd w = rng.form(n, p), z = rng.form(n, q);
    const PFormd lhs = derivation_extend(A, p + q)(wedge(w, z));
    const Eigen::VectorXd rhs = wedge(derivation_extend(A, p)(w), z).coeffs() +
                                wedge(w, derivation_extend(A, q)(z)).coeffs();
    CHECK((lhs.coeffs() - rhs).lpNorm<Eigen::Infinity>() < 1e-13);
  }
  // commutators extend to commutators
  const Eigen::MatrixXd B = rng.symmetric_matrix(n);
  for (int p = 1; p < n; ++p) {
    const Eigen::MatrixXd extA = derivation_extend(A, p).entries();
    const Eigen::MatrixXd extB = derivation_extend(B, p).entries();
    const Eigen::MatrixXd extC =
        derivation_extend(Eigen::MatrixXd(A * B - B * A), p).entries();
    CHECK((extC - (extA * extB - extB * extA)).lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("operators on forms validate shapes") {
  OperatorOnFormsd op(3, 1, Eigen::Matrix3d::Identity());
  CHECK(op(PFormd::basis_element(3, 0b010)).coeff(0b010) == 1.0);
  CHECK_THROWS_AS(op(PFormd(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(OperatorOnFormsd(3, 1, Eigen::Matrix2d::Identity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(derivation_extend(Eigen::MatrixXd::Zero(2, 3), 1),
                  std::invalid_argument);
}
