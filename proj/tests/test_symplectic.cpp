#include <doctest.h>

#include <cmath>

#include "spflag/double_flag.hpp"
#include "spflag/random.hpp"
#include "spflag/symplectic.hpp"

using namespace spflag;

namespace {

Eigen::MatrixXd m2(double a, double b, double c, double d) {
  Eigen::MatrixXd m(2, 2);
  m << a, b, c, d;
  return m;
}

SymmetricMatrix random_sym(int n, Rng& rng) {
  Eigen::MatrixXd a = rng.gaussian_matrix(n, n);
  return SymmetricMatrix(0.5 * (a + a.transpose()));
}

}  // namespace

TEST_CASE("is_symplectic: pinned examples") {
  CHECK(is_symplectic(Eigen::MatrixXd::Identity(4, 4)));
  CHECK(is_symplectic(symplectic_form(3)));
  CHECK(is_symplectic(m2(1, 1, 0, 1)));
  CHECK_FALSE(is_symplectic(m2(2, 0, 0, 1)));
  CHECK_THROWS_AS(is_symplectic(Eigen::MatrixXd::Identity(3, 3)), ValidationError);
}

TEST_CASE("sp_inverse: pinned examples") {
  CHECK((sp_inverse(SymplecticElement::identity(2)).mat() - Eigen::MatrixXd::Identity(4, 4)).norm() == 0.0);

  SymplecticElement u = SymplecticElement::from_matrix(m2(1, 1, 0, 1));
  CHECK((sp_inverse(u).mat() - m2(1, -1, 0, 1)).norm() == 0.0);

  SymplecticElement j = SymplecticElement::from_matrix(symplectic_form(2));
  CHECK((sp_inverse(j).mat() + symplectic_form(2)).norm() == 0.0);
}

TEST_CASE("sp_inverse is an involution and a true inverse") {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + t % 3;
    SymplecticElement g =
        SymplecticElement::levi(random_well_conditioned(n, rng)) *
        SymplecticElement::upper_unipotent(random_sym(n, rng)) *
        SymplecticElement::unchecked(weyl_rep(n, static_cast<int>(t) % (n + 1)).matrix);
    CHECK((sp_inverse(sp_inverse(g)).mat() - g.mat()).norm() < 1e-12);
    CHECK((g.mat() * sp_inverse(g).mat() - Eigen::MatrixXd::Identity(2 * n, 2 * n)).norm() < 1e-12);
  }
}

TEST_CASE("conjugate_parabolic: pinned examples and oracle") {
  SUBCASE("identity conjugation returns p") {
    SiegelParabolicElement p = SiegelParabolicElement::from_parts(m2(2, 1, 0, 1), m2(2, 1, 0, 1) * m2(1, 0, 0, -1));
    SymplecticElement out = conjugate_parabolic(SymplecticElement::identity(2), p);
    CHECK((out.mat() - p.mat()).norm() < 1e-13);
  }
  SUBCASE("conjugation by the form matrix swaps the Levi blocks") {
    Eigen::MatrixXd x = m2(2, 1, 1, 1);
    SiegelParabolicElement p = SiegelParabolicElement::levi(x);
    SymplecticElement j = SymplecticElement::from_matrix(symplectic_form(2));
    SymplecticElement out = conjugate_parabolic(j, p);
    Eigen::MatrixXd xinv_t = x.inverse().transpose();
    CHECK((out.a() - xinv_t).norm() < 1e-13);
    CHECK((out.d() - x).norm() < 1e-13);
    CHECK(out.b().norm() < 1e-13);
    CHECK(out.c().norm() < 1e-13);
  }
  SUBCASE("matches the triple product on random input") {
    Rng rng(5);
    for (int t = 0; t < 25; ++t) {
      int n = 2;
      SymplecticElement g = SymplecticElement::levi(random_well_conditioned(n, rng)) *
                            SymplecticElement::lower_unipotent(random_sym(n, rng));
      Eigen::MatrixXd x = random_well_conditioned(n, rng);
      SiegelParabolicElement p = SiegelParabolicElement::from_parts(x, x * random_sym(n, rng).mat());
      Eigen::MatrixXd triple = sp_inverse(g).mat() * p.mat() * g.mat();
      CHECK((conjugate_parabolic(g, p).mat() - triple).norm() < 1e-10);
    }
  }
}

TEST_CASE("is_in_K: pinned examples") {
  CHECK(is_in_K(SymplecticElement::identity(3)));
  CHECK(is_in_K(SymplecticElement::from_matrix(symplectic_form(2))));
  CHECK_FALSE(is_in_K(SymplecticElement::from_matrix(m2(2, 0, 0, 0.5))));
}

TEST_CASE("weyl_rep: pinned matrices") {
  CHECK((weyl_rep(3, 3).matrix - Eigen::MatrixXd::Identity(6, 6)).norm() == 0.0);
  CHECK((weyl_rep(3, 0).matrix - symplectic_form(3)).norm() == 0.0);

  Eigen::MatrixXd w(4, 4);
  w << 0, 0, -1, 0,
       0, 1, 0, 0,
       1, 0, 0, 0,
       0, 0, 0, 1;
  CHECK((weyl_rep(2, 1).matrix - w).norm() == 0.0);

  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) CHECK(is_symplectic(weyl_rep(n, k).matrix));
  CHECK_THROWS_AS(weyl_rep(2, 3), ValidationError);
  CHECK_THROWS_AS(weyl_rep(2, -1), ValidationError);
}

TEST_CASE("fractional_action: pinned examples") {
  SymmetricMatrix z((Eigen::MatrixXd(1, 1) << 3.0).finished());

  SUBCASE("identity acts trivially") {
    CHECK(fractional_action(SymplecticElement::identity(1), z)(0, 0) == doctest::Approx(3.0));
  }
  SUBCASE("the form matrix sends z to -z^{-1}") {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
      int n = 1 + t % 3;
      SymmetricMatrix zz = random_sym(n, rng);
      if (std::abs(zz.mat().determinant()) < 1e-3) continue;
      SymplecticElement j = SymplecticElement::from_matrix(symplectic_form(n));
      SymmetricMatrix out = fractional_action(j, zz);
      CHECK((out.mat() + zz.mat().inverse()).norm() < 1e-9);
    }
  }
  SUBCASE("scalar shear") {
    SymplecticElement u = SymplecticElement::from_matrix(m2(1, 1, 0, 1));
    CHECK(fractional_action(u, z)(0, 0) == doctest::Approx(2.0));
  }
  SUBCASE("off-chart points raise SingularDenominator") {
    SymplecticElement j = SymplecticElement::from_matrix(symplectic_form(1));
    SymmetricMatrix zero = SymmetricMatrix::zero(1);
    CHECK_THROWS_AS(fractional_action(j, zero), SingularDenominator);
  }
}

TEST_CASE("fractional_action composition law") {
  Rng rng(17);
  int used = 0;
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 3;
    SymplecticElement g1 = SymplecticElement::levi(random_well_conditioned(n, rng)) *
                           SymplecticElement::upper_unipotent(random_sym(n, rng));
    SymplecticElement g2 = SymplecticElement::unchecked(weyl_rep(n, t % (n + 1)).matrix) *
                           SymplecticElement::lower_unipotent(random_sym(n, rng));
    SymmetricMatrix z = random_sym(n, rng);
    try {
      SymmetricMatrix lhs = fractional_action(g1, fractional_action(g2, z));
      SymmetricMatrix rhs = fractional_action(g1 * g2, z);
      CHECK((lhs.mat() - rhs.mat()).norm() < 1e-9 * std::max(1.0, rhs.mat().norm()));
      ++used;
    } catch (const SingularDenominator&) {
    }
  }
  CHECK(used >= 60);
}

TEST_CASE("iwasawa_vz: pinned examples") {
  SUBCASE("z = 0 gives identity factors") {
    IwasawaVz iw = iwasawa_vz(SymmetricMatrix::zero(2));
    CHECK((iw.k.mat() - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-14);
    CHECK((iw.ma.mat() - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-14);
    CHECK((iw.n_elem.mat() - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-14);
    CHECK(iw.alpha == doctest::Approx(1.0));
  }
  SUBCASE("scalar z = 1") {
    IwasawaVz iw = iwasawa_vz(SymmetricMatrix((Eigen::MatrixXd(1, 1) << 1.0).finished()));
    double s = 1.0 / std::sqrt(2.0);
    CHECK(iw.alpha == doctest::Approx(std::sqrt(2.0)));
    CHECK(iw.ma.a()(0, 0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(iw.k.a()(0, 0) == doctest::Approx(s));
    CHECK(iw.k.b()(0, 0) == doctest::Approx(-s));
    CHECK(iw.k.c()(0, 0) == doctest::Approx(s));
    CHECK(iw.n_elem.b()(0, 0) == doctest::Approx(0.5));
  }
  SUBCASE("random reconstruction at n = 3") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
      SymmetricMatrix z = random_sym(3, rng);
      IwasawaVz iw = iwasawa_vz(z);
      Eigen::MatrixXd v = SymplecticElement::lower_unipotent(z).mat();
      CHECK((iw.k.mat() * iw.ma.mat() * iw.n_elem.mat() - v).norm() < 1e-10);
      CHECK(is_in_K(iw.k));
    }
  }
}

TEST_CASE("levi and parabolic element validation") {
  CHECK_THROWS_AS(SymplecticElement::levi(Eigen::MatrixXd::Zero(2, 2)), ValidationError);
  CHECK_THROWS_AS(
      SiegelParabolicElement::from_parts(m2(1, 0, 0, 1), m2(0, 1, 0, 0)),
      ValidationError);  // x^{-1} z not symmetric
  SiegelParabolicElement p1 = SiegelParabolicElement::from_parts(m2(2, 0, 0, 1), m2(2, 2, 1, -1));
  SiegelParabolicElement p2 = SiegelParabolicElement::from_parts(m2(1, 1, 0, 1), m2(1, 1, 1, 0));
  Eigen::MatrixXd prod = p1.mat() * p2.mat();
  CHECK(((p1 * p2).mat() - prod).norm() < 1e-13);
  CHECK(is_symplectic(p1.mat()));
}
