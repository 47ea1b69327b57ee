#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spflag/intertwiners.hpp"

using namespace spflag;

namespace {

Eigen::MatrixXd scalar_m(double v) { return (Eigen::MatrixXd(1, 1) << v).finished(); }

}  // namespace

TEST_CASE("parameter dictionaries") {
  KernelParams p = KernelParams::p_side({4, 0}, {-2, 0});
  CHECK(p.alpha == Cplx(2, 0));
  CHECK(p.beta == Cplx(1, 0));
  CHECK(p.nu(1, 1) == Cplx(4, 0));
  CHECK(p.mu(1, 1) == Cplx(-2, 0));

  KernelParams q = KernelParams::q_side({-3, 0}, {4, 0}, 2, 1);
  CHECK(q.alpha == Cplx(1, 0));
  CHECK(q.beta == Cplx(1, 0));
  CHECK(q.nu(2, 1) == Cplx(-3, 0));
  CHECK(q.mu(2, 1) == Cplx(4, 0));

  KernelParams q0 = KernelParams::q_side({-1, 0}, {2, 0}, 2, 1);
  CHECK(q0.alpha == Cplx(0, 0));
  CHECK(q0.beta == Cplx(0, 0));
}

TEST_CASE("operator_P: scalar closed forms") {
  GFunction f = g_indicator(1.0, 2.0);
  OrbitIntegrationDomain dom = OrbitIntegrationDomain::make(1, 1, 0);
  QuadratureSpec quad;
  quad.seed = 5;

  SUBCASE("zero in, zero out") {
    McEstimateC v = operator_P_at(g_zero(1), {2, 0}, {1, 0}, dom, quad, scalar_m(1.0));
    CHECK(std::abs(v.value) == 0.0);
  }
  SUBCASE("alpha = 2, beta = 1 gives y^2 on the unit interval shift") {
    for (double yv : {0.5, 1.0, -1.7}) {
      McEstimateC v = operator_P_at(f, {2, 0}, {1, 0}, dom, quad, scalar_m(yv));
      CHECK(v.value.real() == doctest::Approx(yv * yv).epsilon(1e-12));
      CHECK(v.std_error == 0.0);
    }
  }
  SUBCASE("general exponents match the 1-d antiderivative") {
    // integral of z^{a-b-1} over [1,2] times |y|^{2b}
    double a = 3.2, b = 0.7;
    double expect = (std::pow(2.0, a - b) - 1.0) / (a - b) * std::pow(1.3, 2 * b);
    McEstimateC v = operator_P_at(f, {a, 0}, {b, 0}, dom, quad, scalar_m(1.3));
    CHECK(v.value.real() == doctest::Approx(expect).epsilon(1e-10));
  }
  SUBCASE("homogeneity of the output") {
    LFunction pf = operator_P(f, {2, 0}, {1, 0}, dom, quad);
    CHECK(pf.mu == Cplx(-2, 0));
    double ratio = (pf.eval(scalar_m(2.0)) / pf.eval(scalar_m(1.0))).real();
    CHECK(ratio == doctest::Approx(4.0));
  }
}

TEST_CASE("operator_P: Monte Carlo route consistency at n = 1") {
  // indicator without the declared interval forces the sampled route; the
  // deterministic quadrature serves as the oracle
  GFunction f = g_indicator(1.0, 2.0);
  GFunction f_mc = f;
  f_mc.interval_1d = std::nullopt;
  OrbitIntegrationDomain dom = OrbitIntegrationDomain::make(1, 1, 0);
  QuadratureSpec quad;
  quad.budget = 400000;
  quad.seed = 21;
  for (double yv : {1.0, 0.6}) {
    McEstimateC mc = operator_P_at(f_mc, {2, 0}, {1, 0}, dom, quad, scalar_m(yv));
    McEstimateC exact = operator_P_at(f, {2, 0}, {1, 0}, dom, quad, scalar_m(yv));
    CHECK(std::abs(mc.value - exact.value) <= 3 * mc.std_error + 1e-3 * std::abs(exact.value));
  }
}

TEST_CASE("operator_Q: pinned examples") {
  SUBCASE("unit kernel returns the frame average") {
    LFunction f = l_k_invariant(2, 1, {2, 0});
    SymmetricMatrix z = SymmetricMatrix::indefinite_identity(2, 1, 1);
    McEstimateC v = operator_Q_at(f, {-1, 0}, {2, 0}, 2000, 3, 1, z);
    CHECK(v.value.real() == doctest::Approx(1.0));
    CHECK(v.value.imag() == 0.0);
  }
  SUBCASE("zero in, zero out") {
    McEstimateC v = operator_Q_at(l_zero(2, 1, {4, 0}), {-3, 0}, {4, 0}, 1000, 3, 1,
                                  SymmetricMatrix::identity(2));
    CHECK(std::abs(v.value) == 0.0);
  }
  SUBCASE("angular quadrature oracle at n=2, d=1, alpha = beta = 1") {
    LFunction f = l_k_invariant(2, 1, {4, 0});
    SymmetricMatrix z((Eigen::MatrixXd(2, 2) << 0.9, -0.4, -0.4, -1.2).finished());
    Eigen::MatrixXd zinv = z.mat().inverse();
    double quad_val = 0;
    const int steps = 40000;
    for (int i = 0; i < steps; ++i) {
      double th = (i + 0.5) * (2 * std::numbers::pi / steps);
      Eigen::VectorXd y(2);
      y << std::cos(th), std::sin(th);
      quad_val += std::abs(z.mat().determinant()) * std::abs(y.dot(zinv * y)) / steps;
    }
    McEstimateC mc = operator_Q_at(f, {-3, 0}, {4, 0}, 300000, 11, 2, z);
    CHECK(std::abs(mc.value.real() - quad_val) <= 3 * mc.std_error + 1e-3 * quad_val);
  }
}

TEST_CASE("check_intertwine_P: identity and scalar closed form") {
  GFunction f = g_indicator(1.0, 2.0);
  QuadratureSpec quad;
  quad.seed = 9;

  IntertwineReport id = check_intertwine_P(Eigen::MatrixXd::Identity(1, 1), {4, 0}, {-2, 0}, f, 1, 2, quad);
  CHECK(id.pass);
  CHECK(id.max_deviation < 1e-14);

  IntertwineReport rep = check_intertwine_P(scalar_m(2.0), {4, 0}, {-2, 0}, f, 1, 3, quad);
  CHECK(rep.pass);
  CHECK(rep.max_rel_deviation < 1e-8);

  // the transformed side in closed form: P(pi(levi(2)) f)(y) = y^2 / 4
  GFunction moved = apply_piG(SymplecticElement::levi(scalar_m(2.0)), {4, 0}, f);
  OrbitIntegrationDomain dom = OrbitIntegrationDomain::make(1, 1, 0);
  McEstimateC lhs = operator_P_at(moved, {2, 0}, {1, 0}, dom, quad, scalar_m(1.0));
  CHECK(lhs.value.real() == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("check_intertwine_Q: validation and identity") {
  LFunction f = l_k_invariant(2, 1, {4, 0});
  CHECK_THROWS_AS(
      check_intertwine_Q(Eigen::MatrixXd::Identity(2, 2), {3, 0}, {4, 0}, f, 1, 1000, 3),
      ValidationError);  // outside the reverse region

  IntertwineReport rep =
      check_intertwine_Q(Eigen::MatrixXd::Identity(2, 2), {-3, 0}, {4, 0}, f, 2, 20000, 3);
  CHECK(rep.pass);
  CHECK(rep.max_deviation < 1e-13);
}

TEST_CASE("bound estimates: pinned scalar examples") {
  QuadratureSpec quad;
  quad.budget = 60000;
  quad.seed = 13;

  SUBCASE("forward majorant converges inside the region") {
    BoundProbe p = bound_estimate_P(4, -2, 1, 1, 1, 0, quad);
    CHECK_FALSE(p.divergence_suspected);
    CHECK(p.estimate.value > 0);
    // exponents collapse to int_0^inf (1+z^2)^{-3} dz = 3 pi / 16 on the
    // positive stratum; cross-check against direct 1-d quadrature
    double direct = 0;
    const int steps = 2000000;
    for (int i = 0; i < steps; ++i) {
      double z = (i + 0.5) * (60.0 / steps);
      direct += std::pow(1 + z * z, -3.0) * (60.0 / steps);
    }
    CHECK(direct == doctest::Approx(3 * std::numbers::pi / 16).epsilon(1e-4));
    CHECK(std::abs(p.estimate.value - direct) <= 3 * p.estimate.std_error + 2e-3 * direct);
  }
  SUBCASE("radial violation diverges at the origin") {
    BoundProbe p = bound_estimate_P(0.5, 0, 1, 1, 1, 0, quad);
    CHECK(p.divergence_suspected);
  }
  SUBCASE("reverse majorant converges inside the region") {
    BoundProbe p = bound_estimate_Q(-3, 3, 1, 1, quad);
    CHECK_FALSE(p.divergence_suspected);
  }
  SUBCASE("large positive nu diverges at infinity") {
    BoundProbe p = bound_estimate_Q(6, 1, 1, 1, quad);
    CHECK(p.divergence_suspected);
  }
}

TEST_CASE("forward/reverse preconditions are mutually exclusive") {
  for (double nu = -6; nu <= 6; nu += 1.0)
    for (double mu = -6; mu <= 6; mu += 1.0) {
      bool p = region_P(nu, mu, 2, 1);
      bool q = region_Q(nu, mu, 2, 1);
      CHECK_FALSE((p && q));
    }
}
