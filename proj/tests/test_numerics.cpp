#include <doctest.h>

#include "spflag/double_flag.hpp"
#include "spflag/numerics.hpp"
#include "spflag/random.hpp"

using namespace spflag;

namespace {

Eigen::MatrixXd sym(std::initializer_list<std::initializer_list<double>> rows) {
  int n = static_cast<int>(rows.size());
  Eigen::MatrixXd m(n, n);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("signature: pinned examples") {
  CHECK(signature(SymmetricMatrix::identity(2)) == Signature{2, 0, 0});
  CHECK(signature(SymmetricMatrix(sym({{1, 0}, {0, -1}}))) == Signature{1, 1, 0});

  // default band is max(1e-12, 1e-9 * spectral norm) = 1e-9 here, so 1e-15
  // falls inside it while an eigenvalue just outside the band does not
  CHECK(signature(SymmetricMatrix(sym({{1, 0}, {0, 1e-15}}))) == Signature{1, 0, 1});
  CHECK(signature(SymmetricMatrix(sym({{1, 0}, {0, 1e-8}}))) == Signature{2, 0, 0});
  CHECK(signature(SymmetricMatrix(sym({{1, 0}, {0, -1e-10}}))) == Signature{1, 0, 1});
}

TEST_CASE("signature: zero band scales with the spectral norm") {
  // spectral norm 1e6 -> band 1e-3
  CHECK(signature(SymmetricMatrix(sym({{1e6, 0}, {0, 1e-4}}))) == Signature{1, 0, 1});
  CHECK(signature(SymmetricMatrix(sym({{1e6, 0}, {0, 1e-2}}))) == Signature{2, 0, 0});
}

TEST_CASE("rank: pinned examples") {
  CHECK(rank_of(Eigen::MatrixXd::Zero(3, 2)) == 0);
  CHECK(rank_of(Eigen::MatrixXd::Identity(3, 3)) == 3);
  CHECK(rank_of(sym({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("signature invariant under well-conditioned congruence") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 6;
    Eigen::MatrixXd a = rng.gaussian_matrix(n, n);
    SymmetricMatrix s(0.5 * (a + a.transpose()));
    Eigen::MatrixXd h = random_well_conditioned(n, rng);
    SymmetricMatrix moved(h * s.mat() * h.transpose());
    CHECK(signature(moved) == signature(s));
  }
}

TEST_CASE("pos + neg equals rank for random symmetric matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 5;
    Eigen::MatrixXd a = rng.gaussian_matrix(n, n);
    SymmetricMatrix s(0.5 * (a + a.transpose()));
    Signature sig = signature(s);
    CHECK(sig.pos + sig.neg == rank_of(s.mat()));
  }
}

TEST_CASE("symmetrization and validation") {
  Eigen::MatrixXd m(2, 2);
  m << 1, 3, 1, 2;
  SymmetricMatrix s(m);
  CHECK(s(0, 1) == doctest::Approx(2.0));
  CHECK(s(1, 0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(SymmetricMatrix(Eigen::MatrixXd::Zero(2, 3)), ValidationError);
  TolerancePolicy bad;
  bad.rel_eps = 0;
  CHECK_THROWS_AS(bad.band(1.0), ValidationError);
}

TEST_CASE("indefinite identity constructor") {
  SymmetricMatrix z = SymmetricMatrix::indefinite_identity(4, 2, 1);
  CHECK(z(0, 0) == 1.0);
  CHECK(z(2, 2) == -1.0);
  CHECK(z(3, 3) == 0.0);
  CHECK(signature(z) == Signature{2, 1, 1});
}
