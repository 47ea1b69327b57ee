#include "spflag/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "spflag/double_flag.hpp"
#include "spflag/intertwiners.hpp"
#include "spflag/invariants.hpp"
#include "spflag/lagrangian.hpp"
#include "spflag/principal_series.hpp"
#include "spflag/random.hpp"
#include "spflag/symplectic.hpp"

namespace spflag {

namespace {

std::string fnum(double v) {
  char b[48];
  std::snprintf(b, sizeof b, "%.6g", v);
  return b;
}

struct Collector {
  SuiteResult res;

  explicit Collector(std::string name) { res.name = std::move(name); }

  void check(bool ok, const std::string& line) {
    res.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
    if (!ok) res.pass = false;
  }

  SuiteResult finish() {
    res.pass = true;
    for (const auto& l : res.lines)
      if (l.rfind("FAIL", 0) == 0) res.pass = false;
    return res;
  }
};

Eigen::MatrixXd random_symmetric(int n, Rng& rng, double scale = 1.0) {
  Eigen::MatrixXd a = rng.gaussian_matrix(n, n) * scale;
  return 0.5 * (a + a.transpose());
}

SymmetricMatrix random_invertible_symmetric(int n, Rng& rng, const TolerancePolicy& tol = {}) {
  for (;;) {
    SymmetricMatrix z(random_symmetric(n, rng));
    if (signature(z, tol).zero == 0) return z;
  }
}

/// Invertible symmetric matrix with eigenvalues of modulus in [0.3, 3]:
/// conditioning <= 10, so inverse-based routes keep ~1e-14 relative accuracy.
SymmetricMatrix random_spectral_symmetric(int n, Rng& rng) {
  Eigen::MatrixXd q = sample_stiefel(n, n, rng);
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) {
    double mag = 0.3 + 2.7 * rng.uniform();
    d(i) = (rng.uniform() < 0.5) ? mag : -mag;
  }
  return SymmetricMatrix(q * d.asDiagonal() * q.transpose());
}

/// Invertible matrix near the identity; keeps norms of long generator
/// products at O(1) so absolute residual thresholds are meaningful.
Eigen::MatrixXd near_identity(int n, Rng& rng) {
  for (;;) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) + 0.35 * rng.gaussian_matrix(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(h);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 0 && sv(0) / sv(sv.size() - 1) < 50.0) return h;
  }
}

/// Random group element: product of Levi, unipotent and coset-representative
/// generators.
SymplecticElement random_symplectic(int n, Rng& rng) {
  SymplecticElement g = SymplecticElement::identity(n);
  int factors = 3 + static_cast<int>(rng.next_u64() % 3);
  for (int i = 0; i < factors; ++i) {
    switch (rng.next_u64() % 3) {
      case 0:
        g = g * SymplecticElement::levi(near_identity(n, rng));
        break;
      case 1:
        g = g * SymplecticElement::upper_unipotent(SymmetricMatrix(random_symmetric(n, rng, 0.5)));
        break;
      default: {
        int k = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n + 1));
        g = g * SymplecticElement::unchecked(weyl_rep(n, k).matrix);
        break;
      }
    }
  }
  return g;
}

SiegelParabolicElement random_parabolic(int n, Rng& rng) {
  Eigen::MatrixXd x = near_identity(n, rng);
  Eigen::MatrixXd s = random_symmetric(n, rng, 0.5);
  return SiegelParabolicElement::from_parts(x, x * s);
}

double rel_diff(double a, double b) {
  double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

// ---------------------------------------------------------------------------

SuiteResult suite_symplectic(const SuiteOptions& opt) {
  Collector c("symplectic-identities");
  Rng rng(mix_seed(opt.seed, 0x51u));

  double max_inv = 0, max_conj = 0, max_invol = 0;
  int membership_fail = 0;
  for (int i = 0; i < 500; ++i) {
    int n = 1 + i % 4;
    SymplecticElement g = random_symplectic(n, rng);
    if (!is_symplectic(g.mat())) ++membership_fail;

    SymplecticElement gi = sp_inverse(g);
    max_inv = std::max(max_inv,
                       (g.mat() * gi.mat() - Eigen::MatrixXd::Identity(2 * n, 2 * n)).norm());
    max_invol = std::max(max_invol, (sp_inverse(gi).mat() - g.mat()).norm());

    SiegelParabolicElement p = random_parabolic(n, rng);
    Eigen::MatrixXd triple = gi.mat() * p.mat() * g.mat();
    max_conj = std::max(max_conj, (conjugate_parabolic(g, p).mat() - triple).norm());
  }
  c.check(membership_fail == 0,
          "membership: Gram and block criteria accept all 500 generator products");
  c.check(max_inv < 1e-10, "inverse residual max " + fnum(max_inv) + " < 1e-10");
  c.check(max_invol < 1e-12, "inverse involution residual max " + fnum(max_invol) + " < 1e-12");
  c.check(max_conj < 1e-10, "parabolic conjugation vs triple product max " + fnum(max_conj) + " < 1e-10");

  bool weyl_ok = true;
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      if (!is_symplectic(weyl_rep(n, k).matrix)) weyl_ok = false;
  c.check(weyl_ok, "coset representatives w_k symplectic for all 0 <= k <= n <= 6");

  double max_cocycle = 0;
  int cocycle_used = 0;
  for (int i = 0; i < 100; ++i) {
    int n = 1 + i % 3;
    SymplecticElement g1 = random_symplectic(n, rng);
    SymplecticElement g2 = random_symplectic(n, rng);
    SymmetricMatrix z(random_symmetric(n, rng));
    try {
      SymmetricMatrix inner = fractional_action(g2, z);
      SymmetricMatrix lhs = fractional_action(g1, inner);
      SymmetricMatrix rhs = fractional_action(g1 * g2, z);
      double rel = (lhs.mat() - rhs.mat()).norm() / std::max(1.0, rhs.mat().norm());
      max_cocycle = std::max(max_cocycle, rel);
      ++cocycle_used;
    } catch (const SingularDenominator&) {
      // off-chart pair, skipped
    }
  }
  c.check(cocycle_used >= 50 && max_cocycle < 1e-9,
          "composition law on " + std::to_string(cocycle_used) + " in-chart pairs, max rel residual " +
              fnum(max_cocycle) + " < 1e-9");
  return c.finish();
}

SuiteResult suite_iwasawa(const SuiteOptions& opt) {
  Collector c("iwasawa");
  Rng rng(mix_seed(opt.seed, 0x52u));
  double max_recon = 0, max_alpha = 0, max_sym = 0;
  bool k_ok = true, ma_ok = true;
  for (int i = 0; i < 200; ++i) {
    int n = 1 + i % 4;
    SymmetricMatrix z(random_symmetric(n, rng, 1.5));
    IwasawaVz iw = iwasawa_vz(z);
    Eigen::MatrixXd v = SymplecticElement::lower_unipotent(z).mat();
    max_recon = std::max(max_recon, (iw.k.mat() * iw.ma.mat() * iw.n_elem.mat() - v).norm());
    if (!is_in_K(iw.k)) k_ok = false;

    Eigen::MatrixXd one_z2 = Eigen::MatrixXd::Identity(n, n) + z.mat() * z.mat();
    double alpha_direct = std::pow(one_z2.determinant(), 1.0 / (2.0 * n));
    max_alpha = std::max(max_alpha, rel_diff(iw.alpha, alpha_direct));

    // Levi shape with positive definite upper block
    Eigen::MatrixXd h = iw.ma.a();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (iw.ma.b().norm() != 0 || iw.ma.c().norm() != 0 || es.eigenvalues()(0) <= 0) ma_ok = false;

    Eigen::MatrixXd upper = iw.n_elem.b();
    max_sym = std::max(max_sym, (upper - upper.transpose()).norm());
  }
  c.check(max_recon < 1e-10, "reconstruction residual max " + fnum(max_recon) + " < 1e-10");
  c.check(k_ok, "k factor passes the maximal-compact test on all 200 draws");
  c.check(ma_ok, "ma factor has Levi shape with positive definite block");
  c.check(max_alpha < 1e-12, "alpha vs direct determinant route, max rel " + fnum(max_alpha) + " < 1e-12");
  c.check(max_sym < 1e-10, "unipotent factor symmetry residual max " + fnum(max_sym) + " < 1e-10");

  // closed-form spot check at n=1, z=1
  SymmetricMatrix z1((Eigen::MatrixXd(1, 1) << 1.0).finished());
  IwasawaVz iw = iwasawa_vz(z1);
  double s = 1.0 / std::sqrt(2.0);
  bool spot = rel_diff(iw.alpha, std::sqrt(2.0)) < 1e-14 &&
              std::abs(iw.k.a()(0, 0) - s) < 1e-14 && std::abs(iw.k.b()(0, 0) + s) < 1e-14;
  c.check(spot, "scalar case z=1: alpha = sqrt(2), k = (1/sqrt2)[[1,-1],[1,1]]");
  return c.finish();
}

SuiteResult suite_orbit_census(const SuiteOptions& opt) {
  Collector c("orbit-census");
  Rng rng(mix_seed(opt.seed, 0x53u));

  const int expected_total[5] = {0, 4, 10, 20, 35};
  bool counts_ok = true;
  for (int n = 1; n <= 4; ++n) {
    auto labels = enumerate_orbit_labels(n);
    if (static_cast<int>(labels.size()) != expected_total[n]) counts_ok = false;
    for (int k = 0; k <= n; ++k) {
      int per_cell = 0;
      for (const auto& l : labels)
        if (l.k == k) ++per_cell;
      int m = n - k;
      if (per_cell != (m + 2) * (m + 1) / 2) counts_ok = false;
    }
  }
  c.check(counts_ok, "label counts 4/10/20/35 for n=1..4 with per-cell binomials");

  bool sep_ok = true, round_ok = true;
  for (int n = 1; n <= 4; ++n) {
    auto labels = enumerate_orbit_labels(n);
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (labels[i] == labels[j]) sep_ok = false;
    for (const auto& l : labels) {
      LagrangianFrame f = representative_frame(n, l.k, l.r, l.s);
      if (!(orbit_invariant(f) == l)) round_ok = false;
      if (bruhat_index(f) != l.k) round_ok = false;
    }
  }
  c.check(sep_ok, "distinct labels give distinct invariant tuples");
  c.check(round_ok, "orbit invariant round-trips every canonical frame exactly");

  int stable_fail = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& l : enumerate_orbit_labels(n)) {
      LagrangianFrame rep = representative_frame(n, l.k, l.r, l.s);
      for (int t = 0; t < 200; ++t) {
        Eigen::MatrixXd h = random_well_conditioned(n, rng);
        LagrangianFrame moved = act(SymplecticElement::levi(h), rep);
        if (!(orbit_invariant(moved) == l)) ++stable_fail;
      }
    }
  }
  c.check(stable_fail == 0, "invariant stable under 200 random Levi actions per label (n <= 4)");

  bool basis_ok = true;
  for (int t = 0; t < 50; ++t) {
    int n = 1 + t % 4;
    SymmetricMatrix z(random_symmetric(n, rng));
    LagrangianFrame f = frame_from_z(z);
    Eigen::MatrixXd g = random_well_conditioned(n, rng);
    if (!(orbit_invariant(f.with_basis(g)) == orbit_invariant(f))) basis_ok = false;
  }
  c.check(basis_ok, "form signature invariant under frame basis changes");
  return c.finish();
}

SuiteResult suite_cell_action(const SuiteOptions& opt) {
  Collector c("cell-action");
  Rng rng(mix_seed(opt.seed, 0x54u));

  double max_dev = 0;
  int used = 0, skipped = 0;
  for (int i = 0; used < 100; ++i) {
    int n = 1 + i % 3;
    int k = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n + 1));
    int m = n - k;
    CellPoint pt = CellPoint::make(n, k, SymmetricMatrix(random_symmetric(std::max(m, 0), rng)),
                                   rng.gaussian_matrix(m, k));
    Eigen::MatrixXd h = random_well_conditioned(n, rng);
    CellPoint closed{0, 0, {}, {}};
    Eigen::MatrixXd eta_frame;
    try {
      closed = l_action_on_cell(LeviBlocks::split(h, k), pt);
      Eigen::MatrixXd big = Eigen::MatrixXd::Identity(2 * n, 2 * n);
      big.bottomLeftCorner(n, n) = pt.eta().mat();
      Eigen::MatrixXd moved = cell_action_matrix(h, n, k) * big;
      Eigen::MatrixXd a11 = moved.topLeftCorner(n, n);
      eta_frame = moved.bottomLeftCorner(n, n) * a11.partialPivLu().inverse();
      if (!eta_frame.allFinite()) {
        ++skipped;
        continue;
      }
    } catch (const SingularDenominator&) {
      ++skipped;
      continue;
    }
    Eigen::MatrixXd eta_closed = closed.eta().mat();
    double rel = (eta_closed - eta_frame).norm() / std::max(1.0, eta_frame.norm());
    max_dev = std::max(max_dev, rel);
    // the frame route must reproduce the zero block as well
    max_dev = std::max(max_dev, eta_frame.bottomRightCorner(k, k).norm() /
                                    std::max(1.0, eta_frame.norm()));
    ++used;
  }
  c.check(max_dev < 1e-9, "closed form vs frame-level route on 100 in-chart draws, max rel " +
                              fnum(max_dev) + " < 1e-9 (" + std::to_string(skipped) + " off-chart skips)");

  double max_group = 0;
  int group_used = 0;
  for (int i = 0; group_used < 50 && i < 500; ++i) {
    int n = 1 + i % 3;
    int k = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n + 1));
    int m = n - k;
    CellPoint pt = CellPoint::make(n, k, SymmetricMatrix(random_symmetric(m, rng)),
                                   rng.gaussian_matrix(m, k));
    Eigen::MatrixXd h1 = random_well_conditioned(n, rng);
    Eigen::MatrixXd h2 = random_well_conditioned(n, rng);
    try {
      CellPoint two_step = l_action_on_cell(LeviBlocks::split(h2, k),
                                            l_action_on_cell(LeviBlocks::split(h1, k), pt));
      CellPoint one_step = l_action_on_cell(LeviBlocks::split(h2 * h1, k), pt);
      double rel = (two_step.eta().mat() - one_step.eta().mat()).norm() /
                   std::max(1.0, one_step.eta().mat().norm());
      max_group = std::max(max_group, rel);
      ++group_used;
    } catch (const SingularDenominator&) {
    }
  }
  c.check(group_used == 50 && max_group < 1e-9,
          "group law (h then h' = h'h) on 50 in-chart triples, max rel " + fnum(max_group) + " < 1e-9");

  // identity fixes every point
  bool id_ok = true;
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      CellPoint pt = CellPoint::make(n, k, SymmetricMatrix(random_symmetric(n - k, rng)),
                                     rng.gaussian_matrix(n - k, k));
      CellPoint out = l_action_on_cell(LeviBlocks::split(Eigen::MatrixXd::Identity(n, n), k), pt);
      if ((out.eta().mat() - pt.eta().mat()).norm() > 1e-14) id_ok = false;
    }
  c.check(id_ok, "identity acts trivially on every cell");
  return c.finish();
}

SuiteResult suite_double_flag(const SuiteOptions& opt) {
  Collector c("double-flag");
  Rng rng(mix_seed(opt.seed, 0x55u));

  auto labels21 = enumerate_open_orbits(2, 1);
  std::vector<DoubleOrbitLabel> expect21 = {
      {0, 2, 0, 1, 0}, {1, 1, 0, 1, 0}, {1, 1, 1, 0, 0}, {2, 0, 1, 0, 0}};
  c.check(labels21 == expect21, "open-orbit census for n=2, d=1 is the expected 4 labels");
  c.check(enumerate_open_orbits(1, 1).size() == 2, "open-orbit census for n=1, d=1 has 2 labels");

  bool round_ok = true, open_ok = true;
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= n; ++d)
      for (const auto& l : enumerate_open_orbits(n, d)) {
        if (!is_open(l)) open_ok = false;
        if (!(classify_pair(representative_pair(l)) == l)) round_ok = false;
      }
  c.check(open_ok, "every enumerated label is open (s + t = d)");
  c.check(round_ok, "classify(representative) round-trips every open label, n <= 4");

  bool inv_ok = true;
  for (int n = 1; n <= 4 && inv_ok; ++n)
    for (int d = 1; d <= n && inv_ok; ++d)
      for (const auto& l : enumerate_open_orbits(n, d)) {
        int trials = 200 / std::max(1, static_cast<int>(enumerate_open_orbits(n, d).size()));
        if (!orbit_invariance_check(l, std::max(20, trials), rng)) {
          inv_ok = false;
          break;
        }
      }
  c.check(inv_ok, "labels invariant under random pair-group actions on every open orbit, n <= 4");

  int constraint_fail = 0;
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    int n = 1 + i % 5;
    int d = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
    // both factors drawn with condition < 100, which keeps the restricted
    // form's eigenvalue spread below the relative zero band (1e8 < 1e9)
    int p = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n + 1));
    Eigen::MatrixXd h = random_well_conditioned(n, rng, 100.0);
    SymmetricMatrix z(h * SymmetricMatrix::indefinite_identity(n, p, n - p).mat() * h.transpose());
    Eigen::MatrixXd y = rng.gaussian_matrix(n, d);
    {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(y);
      const Eigen::VectorXd& sv = svd.singularValues();
      if (sv(sv.size() - 1) <= 0 || sv(0) / sv(sv.size() - 1) > 100.0) continue;
    }
    try {
      DoubleOrbitLabel l = classify_pair(PairPoint::make(z, y));
      ++checked;
      if (l.t + l.p < d || l.s + l.q < d || l.s + l.t > d) ++constraint_fail;
    } catch (const NumericalError&) {
      ++constraint_fail;
    }
  }
  c.check(constraint_fail == 0, "signature constraints hold on " + std::to_string(checked) +
                                    " random invertible pairs (n <= 5)");
  return c.finish();
}

SuiteResult suite_determinants(const SuiteOptions& opt) {
  Collector c("determinant-identities");
  Rng rng(mix_seed(opt.seed, 0x56u));

  double max_dual = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 1 + i % 6;
    int d = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
    SymmetricMatrix z = random_spectral_symmetric(n, rng);
    Eigen::MatrixXd y = rng.gaussian_matrix(n, d);
    max_dual = std::max(max_dual, rel_diff(psi2(z, y), psi2_product_route(z, y)));
  }
  c.check(max_dual < 1e-10, "psi2 bordered vs product route, max rel " + fnum(max_dual) + " < 1e-10");

  double max_minor = 0;
  for (int i = 0; i < 100; ++i) {
    int n = 1 + i % 6;
    int d = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(std::min(n, 3)));
    SymmetricMatrix z(random_symmetric(n, rng));
    Eigen::MatrixXd y = rng.gaussian_matrix(n, d);
    double direct = (y.transpose() * z.mat() * y).determinant();
    max_minor = std::max(max_minor, rel_diff(minor_expansion(z, y), direct));
  }
  c.check(max_minor < 1e-10, "minor expansion vs direct determinant, max rel " + fnum(max_minor) + " < 1e-10");

  double max_cb = 0;
  for (int i = 0; i < 50; ++i) {
    int n = 1 + i % 6;
    int d = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(std::min(n, 3)));
    Eigen::MatrixXd y = rng.gaussian_matrix(n, d);
    double gram = (y.transpose() * y).determinant();
    max_cb = std::max(max_cb, rel_diff(minor_expansion(SymmetricMatrix::identity(n), y), gram));
  }
  c.check(max_cb < 1e-10, "Cauchy-Binet specialization at z = 1, max rel " + fnum(max_cb) + " < 1e-10");

  double max_eq1 = 0, max_eq2 = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 1 + i % 4;
    int d = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
    SymmetricMatrix z(random_symmetric(n, rng));
    Eigen::MatrixXd y = rng.gaussian_matrix(n, d);
    Eigen::MatrixXd h = random_well_conditioned(n, rng, 100.0);
    Eigen::MatrixXd m = random_well_conditioned(d, rng, 100.0);
    SymmetricMatrix zz(h * z.mat() * h.transpose());
    Eigen::MatrixXd yy = h * y * m.transpose();
    max_eq1 = std::max(max_eq1, rel_diff(psi1(zz, yy), chi1(h, m) * psi1(z, y)));
    max_eq2 = std::max(max_eq2, rel_diff(psi2(zz, yy), chi2(h, m) * psi2(z, y)));
  }
  c.check(max_eq1 < 1e-9, "psi1 equivariance with multiplier (det h)^2, max rel " + fnum(max_eq1) + " < 1e-9");
  c.check(max_eq2 < 1e-9,
          "psi2 equivariance with multiplier (det h)^2 (det m)^2, max rel " + fnum(max_eq2) + " < 1e-9");

  // polynomial route stays finite and continuous across det z = 0
  bool cont_ok = true;
  for (int i = 0; i < 20; ++i) {
    int n = 2 + i % 3;
    int d = 1 + static_cast<int>(rng.next_u64() % 2);
    if (d > n) d = n;
    Eigen::MatrixXd h = random_well_conditioned(n, rng);
    Eigen::VectorXd diag = Eigen::VectorXd::Ones(n);
    diag(0) = 0.0;
    SymmetricMatrix z0(h * diag.asDiagonal() * h.transpose());
    Eigen::MatrixXd y = rng.gaussian_matrix(n, d);
    double at0 = psi2(z0, y);
    if (!std::isfinite(at0)) cont_ok = false;
    double eps = 1e-7;
    SymmetricMatrix zp(z0.mat() + eps * Eigen::MatrixXd::Identity(n, n));
    SymmetricMatrix zm(z0.mat() - eps * Eigen::MatrixXd::Identity(n, n));
    double scale = std::max({1.0, std::abs(at0), std::abs(psi2(zp, y))});
    if (std::abs(psi2(zp, y) - at0) > 1e-4 * scale || std::abs(psi2(zm, y) - at0) > 1e-4 * scale)
      cont_ok = false;
  }
  c.check(cont_ok, "psi2 polynomial route finite and continuous across singular z");

  double max_signed = 0;
  for (int i = 0; i < 100; ++i) {
    int n = 1 + i % 4;
    int d = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
    long m1 = static_cast<long>(rng.next_u64() % 4);
    long m2 = static_cast<long>(rng.next_u64() % 4);
    SymmetricMatrix z = random_invertible_symmetric(n, rng);
    Eigen::MatrixXd y = rng.gaussian_matrix(n, d);
    double lhs = kernel_K_signed(z, y, m1 + m2, m2);
    double sign = (static_cast<long>(d) * m2) % 2 == 0 ? 1.0 : -1.0;
    double rhs = std::pow(psi1(z, y), static_cast<double>(m1)) *
                 std::pow(psi2(z, y), static_cast<double>(m2)) * sign;
    max_signed = std::max(max_signed, rel_diff(lhs, rhs));
  }
  c.check(max_signed < 1e-12, "signed kernel equals psi1^m1 psi2^m2 up to (-1)^{d m2}, max rel " +
                                  fnum(max_signed) + " < 1e-12");

  double max_polar = 0;
  for (int i = 0; i < 100; ++i) {
    int n = 1 + i % 4;
    int d = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
    double r = std::exp(rng.normal());
    SymmetricMatrix theta(random_symmetric(n, rng));
    Eigen::MatrixXd y = rng.gaussian_matrix(n, d);
    double lhs = block_determinant(SymmetricMatrix(r * theta.mat()), y);
    double rhs = std::pow(r, n - d) * block_determinant(theta, y);
    max_polar = std::max(max_polar, rel_diff(lhs, rhs));
  }
  c.check(max_polar < 1e-10,
          "bordered determinant scaling det[[r T, y],[ty, 0]] = r^{n-d} det[[T, y],[ty, 0]], max rel " +
              fnum(max_polar) + " < 1e-10");
  return c.finish();
}

SuiteResult suite_pochhammer(const SuiteOptions&) {
  Collector c("pochhammer");
  int checked = 0, mismatches = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::vector<long>> all;
    std::vector<long> cur(static_cast<std::size_t>(n), 0);
    // enumerate weakly decreasing tuples with entries <= 8
    for (;;) {
      all.push_back(cur);
      int i = n - 1;
      while (i >= 0) {
        long cap = (i == 0) ? 8 : cur[static_cast<std::size_t>(i - 1)];
        if (cur[static_cast<std::size_t>(i)] < cap) {
          ++cur[static_cast<std::size_t>(i)];
          for (int j = i + 1; j < n; ++j) cur[static_cast<std::size_t>(j)] = 0;
          break;
        }
        --i;
      }
      if (i < 0) break;
    }
    for (long nu = 0; nu >= -6; --nu) {
      for (const auto& parts : all) {
        MultiIndex a = MultiIndex::of(parts);
        bool vanish = pochhammer_vanishes(nu, a);
        bool zero = pochhammer_general(static_cast<double>(nu), a) == 0.0;
        ++checked;
        if (vanish != zero) ++mismatches;
      }
    }
  }
  c.check(mismatches == 0, "vanishing predicate agrees with direct evaluation on " +
                               std::to_string(checked) + " (nu, multi-index) cases");

  // pinned values
  bool spot = pochhammer_general(1.0, MultiIndex::of({2, 1})) == 1.0 &&
              pochhammer_general(-2.0, MultiIndex::of({3})) == 0.0 &&
              pochhammer_general(-2.0, MultiIndex::of({2, 2})) == 7.5 &&
              pochhammer_general(5.0, MultiIndex::of({0, 0, 0})) == 1.0;
  c.check(spot, "closed-form spot values (1)_{(2,1)} = 1, (-2)_{(3)} = 0, (-2)_{(2,2)} = 7.5");
  return c.finish();
}

SuiteResult suite_operator_properties(const SuiteOptions& opt) {
  Collector c("operator-properties");
  Rng rng(mix_seed(opt.seed, 0x58u));

  // dictionary round trips
  {
    KernelParams p = KernelParams::p_side({4, 0}, {-2, 0});
    KernelParams q = KernelParams::q_side({-3, 0}, {4, 0}, 2, 1);
    bool ok = p.alpha == Cplx(2, 0) && p.beta == Cplx(1, 0) && p.nu(1, 1) == Cplx(4, 0) &&
              p.mu(1, 1) == Cplx(-2, 0) && q.alpha == Cplx(1, 0) && q.beta == Cplx(1, 0) &&
              q.nu(2, 1) == Cplx(-3, 0) && q.mu(2, 1) == Cplx(4, 0);
    c.check(ok, "parameter dictionaries round-trip on both sides");
  }

  QuadratureSpec quad;
  quad.budget = opt.budget / 4;
  quad.seed = mix_seed(opt.seed, 0x581u);
  quad.workers = opt.workers;

  // forward operator: linearity and homogeneity at n=1 (deterministic route)
  {
    OrbitIntegrationDomain dom = OrbitIntegrationDomain::make(1, 1, 0);
    GFunction f1 = g_indicator(1.0, 2.0);
    GFunction f2 = g_indicator(1.5, 3.0);
    GFunction combo;
    combo.n = 1;
    combo.interval_1d = {{1.0, 3.0}};
    combo.omega_support = {{1, 0}};
    combo.eval = [f1, f2](const SymmetricMatrix& z) { return 2.0 * f1.eval(z) - 0.5 * f2.eval(z); };
    Cplx alpha{2.0, 0.0}, beta{1.0, 0.0};
    Eigen::MatrixXd y = (Eigen::MatrixXd(1, 1) << 0.8).finished();
    bool linear = true;
    Rng lrng(mix_seed(opt.seed, 0x586u));
    for (int t = 0; t < 3; ++t) {
      double ca = 2.0 * lrng.uniform() - 1.0;
      double cb = 2.0 * lrng.uniform() - 1.0;
      GFunction mix = combo;
      mix.eval = [f1, f2, ca, cb](const SymmetricMatrix& z) {
        return ca * f1.eval(z) + cb * f2.eval(z);
      };
      Cplx lhs = operator_P_at(mix, alpha, beta, dom, quad, y).value;
      Cplx rhs = ca * operator_P_at(f1, alpha, beta, dom, quad, y).value +
                 cb * operator_P_at(f2, alpha, beta, dom, quad, y).value;
      if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(rhs))) linear = false;
    }
    c.check(linear, "forward operator linear over 3 random combinations (deterministic route)");

    double k = 1.7;
    Cplx at_y = operator_P_at(f1, alpha, beta, dom, quad, y).value;
    Cplx at_yk = operator_P_at(f1, alpha, beta, dom, quad, y * k).value;
    Cplx factor = std::pow(std::abs(k), 2.0 * beta.real());
    c.check(std::abs(at_yk - factor * at_y) < 1e-10 * std::abs(at_yk),
            "forward homogeneity (P f)(y k) = |det k|^{2 beta} (P f)(y), scalar case");
  }

  // forward homogeneity at n=2 with common z samples
  {
    OrbitIntegrationDomain dom = OrbitIntegrationDomain::make(2, 2, 0);
    GFunction f = g_gaussian_on_omega(2, 2, 0);
    Cplx alpha{2.5, 0.0}, beta{1.0, 0.0};
    Rng prng(mix_seed(opt.seed, 0x582u));
    Eigen::MatrixXd y = sample_stiefel(2, 1, prng);
    double k = 0.6;
    Cplx at_y = operator_P_at(f, alpha, beta, dom, quad, y).value;
    Cplx at_yk = operator_P_at(f, alpha, beta, dom, quad, y * k).value;
    Cplx factor = std::pow(std::abs(k), 2.0 * beta.real());
    c.check(std::abs(at_yk - factor * at_y) < 1e-10 * std::abs(at_yk),
            "forward homogeneity under common random numbers, n=2");
  }

  // reverse operator: linearity with common frames
  {
    Cplx nu{-3, 0}, mu{4, 0};
    LFunction f1 = l_k_invariant(2, 1, mu);
    LFunction f2 = l_entry_monomial(2, 1, mu, 4);
    LFunction combo = l_zero(2, 1, mu);
    combo.eval = [f1, f2](const Eigen::MatrixXd& y) { return f1.eval(y) + 2.0 * f2.eval(y); };
    SymmetricMatrix z = SymmetricMatrix::indefinite_identity(2, 1, 1);
    std::uint64_t seed = mix_seed(opt.seed, 0x583u);
    Rng lrng(mix_seed(opt.seed, 0x587u));
    bool linear = true;
    for (int t = 0; t < 3; ++t) {
      double ca = 2.0 * lrng.uniform() - 1.0;
      double cb = 2.0 * lrng.uniform() - 1.0;
      LFunction mix = combo;
      mix.eval = [f1, f2, ca, cb](const Eigen::MatrixXd& y) {
        return ca * f1.eval(y) + cb * f2.eval(y);
      };
      Cplx lhs = operator_Q_at(mix, nu, mu, quad.budget, seed, opt.workers, z).value;
      Cplx rhs = ca * operator_Q_at(f1, nu, mu, quad.budget, seed, opt.workers, z).value +
                 cb * operator_Q_at(f2, nu, mu, quad.budget, seed, opt.workers, z).value;
      if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(rhs))) linear = false;
    }
    c.check(linear, "reverse operator linear over 3 random combinations (common frames)");
  }

  // homogeneity law of the model vectors
  {
    double max_dev = 0;
    for (int i = 0; i < 50; ++i) {
      int n = 2 + static_cast<int>(rng.next_u64() % 2);
      int d = 1 + static_cast<int>(rng.next_u64() % 2);
      if (d > n) d = n;
      Cplx mu{1.5, 0.0};
      LFunction f = (i % 2 == 0) ? l_k_invariant(n, d, mu) : l_entry_monomial(n, d, mu, 2);
      Eigen::MatrixXd y = rng.gaussian_matrix(n, d);
      if (rank_of(y) != d) continue;
      Eigen::MatrixXd k = random_well_conditioned(d, rng);
      Cplx lhs = f.eval(y * k);
      Cplx rhs = std::pow(std::abs(k.determinant()), -mu.real()) * f.eval(y);
      max_dev = std::max(max_dev, std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs)));
    }
    c.check(max_dev < 1e-9, "model vectors satisfy F(y k) = |det k|^{-mu} F(y), max rel " + fnum(max_dev));
  }

  // Cauchy-Schwarz domination of the forward operator at the reference frame
  {
    double nu0 = 4, mu0 = -2;
    QuadratureSpec bq = quad;
    bq.budget = std::max<std::size_t>(quad.budget, 40000);
    BoundProbe bound = bound_estimate_P(nu0, mu0, 1, 1, 1, 0, bq);
    bool dominated = !bound.divergence_suspected;
    Eigen::MatrixXd yref = Eigen::MatrixXd::Identity(1, 1);
    OrbitIntegrationDomain dom = OrbitIntegrationDomain::make(1, 1, 0);
    for (int t = 0; t < 20 && dominated; ++t) {
      double a = 0.3 + 2.0 * rng.uniform();
      double b = a + 0.2 + 2.0 * rng.uniform();
      double coef = -2.0 + 4.0 * rng.uniform();
      GFunction f = g_indicator(a, b);
      GFunction scaled = f;
      scaled.eval = [f, coef](const SymmetricMatrix& z) { return coef * f.eval(z); };
      // ||f||^2 with weight (1+z^2)^{nu0 - 1} by direct quadrature on [a, b]
      double norm_sq = 0;
      int steps = 4000;
      double wdt = (b - a) / steps;
      for (int i = 0; i < steps; ++i) {
        double zv = a + (i + 0.5) * wdt;
        norm_sq += coef * coef * std::pow(1 + zv * zv, nu0 - 1.0) * wdt;
      }
      Cplx pf = operator_P_at(scaled, 0.5 * nu0, -0.5 * mu0, dom, quad, yref).value;
      double cap = std::sqrt(std::max(0.0, bound.estimate.value + 3 * bound.estimate.std_error)) *
                   std::sqrt(norm_sq);
      if (std::abs(pf) > cap * (1 + 1e-6)) dominated = false;
    }
    c.check(dominated, "bound^(1/2) * ||f|| dominates |P f(y_ref)| on 20 random test functions");
  }

  // reverse-side domination ||Q F||_G <= bound^(1/2) ||F||_L at n = d = 1
  {
    double nu0 = -3, mu0 = 3;
    QuadratureSpec bq = quad;
    bq.budget = 20000;
    BoundProbe bound = bound_estimate_Q(nu0, mu0, 1, 1, bq);
    bool dominated = !bound.divergence_suspected;
    QuadratureSpec nq = bq;
    nq.budget = 4000;
    for (int t = 0; t < 3 && dominated; ++t) {
      LFunction f = l_entry_monomial(1, 1, {mu0, 0}, static_cast<int>(rng.next_u64() % 3));
      GFunction qf = operator_Q(f, {nu0, 0}, {mu0, 0}, 256, mix_seed(opt.seed, 0x584u, t), opt.workers);
      McEstimate qn = norm_G(qf, nu0, nq);
      McEstimate fn = norm_L(f, 20000, mix_seed(opt.seed, 0x585u, t), opt.workers);
      double cap = (bound.estimate.value + 3 * bound.estimate.std_error) *
                   (fn.value + 3 * fn.std_error);
      if (qn.value > cap * (1 + 1e-6) + 3 * qn.std_error) dominated = false;
    }
    c.check(dominated, "||Q F||^2 dominated by bound * ||F||^2 on random vectors, n = d = 1");
  }
  return c.finish();
}

SuiteResult suite_intertwine_P(const SuiteOptions& opt) {
  Collector c("intertwine-P");
  bool scalar_part = opt.n == 0 || opt.n == 1;
  bool matrix_part = opt.n == 0 || opt.n == 2;

  if (scalar_part) {
    Cplx nu{4, 0}, mu{-2, 0};
    c.check(region_P(4, -2, 1, 1), "(nu, mu) = (4, -2) lies in the forward region at n = d = 1");
    GFunction f = g_indicator(1.0, 2.0);
    QuadratureSpec quad;
    quad.seed = mix_seed(opt.seed, 0x591u);
    quad.workers = opt.workers;

    // closed form: (P f)(y) = |y|^2 at alpha = 2, beta = 1
    OrbitIntegrationDomain dom = OrbitIntegrationDomain::make(1, 1, 0);
    double max_cf = 0;
    for (double yv : {0.5, 1.0, 1.7, -2.0}) {
      Eigen::MatrixXd y = (Eigen::MatrixXd(1, 1) << yv).finished();
      Cplx got = operator_P_at(f, {2, 0}, {1, 0}, dom, quad, y).value;
      max_cf = std::max(max_cf, std::abs(got - Cplx(yv * yv, 0)) / (yv * yv));
    }
    c.check(max_cf < 1e-12, "closed form (P f)(y) = y^2 reproduced, max rel " + fnum(max_cf));

    double worst = 0;
    for (double hv : {2.0, 0.5, -1.5}) {
      Eigen::MatrixXd h = (Eigen::MatrixXd(1, 1) << hv).finished();
      IntertwineReport rep = check_intertwine_P(h, nu, mu, f, 1, 3, quad);
      worst = std::max(worst, rep.max_rel_deviation);
    }
    c.check(worst < 1e-8, "two-route agreement with deterministic quadrature, max rel dev " +
                              fnum(worst) + " < 1e-8");
  }

  if (matrix_part) {
    // exhaustive integer search of the forward region at n=2, d=1
    std::vector<std::pair<int, int>> points;
    for (int nu = -8; nu <= 8; ++nu)
      for (int mu = -8; mu <= 8; ++mu)
        if (region_P(nu, mu, 2, 1)) points.emplace_back(nu, mu);
    bool found = false;
    for (auto& p : points)
      if (p.first == 5 && p.second == -2) found = true;
    c.check(!points.empty() && found,
            "integer grid search finds forward-region points at n=2, d=1 (" +
                std::to_string(points.size()) + " points, includes (5, -2))");

    Cplx nu{5, 0}, mu{-2, 0};
    GFunction f = g_gaussian_on_omega(2, 2, 0);
    QuadratureSpec quad;
    quad.budget = opt.budget;
    quad.seed = mix_seed(opt.seed, 0x592u);
    quad.workers = opt.workers;

    Rng hrng(mix_seed(opt.seed, 0x593u));
    std::vector<Eigen::MatrixXd> hs;
    hs.push_back((Eigen::MatrixXd(2, 2) << 2, 0, 0, 1).finished());
    hs.push_back(random_well_conditioned(2, hrng));
    bool all_pass = true;
    double worst_rel = 0;
    for (const auto& h : hs) {
      IntertwineReport rep = check_intertwine_P(h, nu, mu, f, 1, 2, quad);
      all_pass = all_pass && rep.pass;
      worst_rel = std::max(worst_rel, rep.max_rel_deviation);
    }
    c.check(all_pass, "two-route agreement within 3 sigma at (5, -2), n=2, d=1, max rel dev " +
                          fnum(worst_rel));
  }
  return c.finish();
}

SuiteResult suite_intertwine_Q(const SuiteOptions& opt) {
  Collector c("intertwine-Q");
  int n = opt.n == 0 ? 2 : opt.n;
  int d = opt.d == 0 ? 1 : opt.d;

  // unit-kernel point: nu = -d, mu = n
  {
    Cplx nu{static_cast<double>(-d), 0}, mu{static_cast<double>(n), 0};
    LFunction f = l_k_invariant(n, d, mu);
    SymmetricMatrix z = SymmetricMatrix::indefinite_identity(n, n - 1, 1);
    McEstimateC got = operator_Q_at(f, nu, mu, 4096, mix_seed(opt.seed, 0x5A1u), opt.workers, z);
    c.check(std::abs(got.value - Cplx(1, 0)) == 0.0, "unit kernel: Q F = 1 exactly at (nu, mu) = (-d, n)");

    Eigen::MatrixXd href = Eigen::MatrixXd::Identity(n, n);
    href(0, 0) = 2.0;
    IntertwineReport rep = check_intertwine_Q(href, nu, mu, f, 2, opt.budget / 4,
                                              mix_seed(opt.seed, 0x5A2u), opt.workers);
    c.check(rep.pass, "two-route agreement at the unit-kernel point, max rel dev " +
                          fnum(rep.max_rel_deviation));
  }

  if (n == 2 && d == 1) {
    Cplx nu{-3, 0}, mu{4, 0};
    c.check(region_Q(-3, 4, 2, 1), "(nu, mu) = (-3, 4) lies in the reverse region at n=2, d=1");

    // angular quadrature oracle for Q F at F = 1 on frames, alpha = beta = 1
    LFunction f = l_k_invariant(2, 1, mu);
    SymmetricMatrix z((Eigen::MatrixXd(2, 2) << 1.3, 0.2, 0.2, -0.7).finished());
    double quad_val = 0;
    int steps = 20000;
    Eigen::MatrixXd zinv = z.mat().inverse();
    for (int i = 0; i < steps; ++i) {
      double th = (i + 0.5) * (2.0 * std::numbers::pi / steps);
      Eigen::VectorXd y(2);
      y << std::cos(th), std::sin(th);
      quad_val += std::abs(z.mat().determinant()) * std::abs(y.dot(zinv * y)) / steps;
    }
    McEstimateC mc = operator_Q_at(f, nu, mu, opt.budget, mix_seed(opt.seed, 0x5A3u), opt.workers, z);
    double dev = std::abs(mc.value.real() - quad_val);
    c.check(dev <= 3 * mc.std_error + 1e-4 * quad_val,
            "reverse operator matches the angular quadrature oracle: mc " + fnum(mc.value.real()) +
                " vs quad " + fnum(quad_val) + " (3 sigma = " + fnum(3 * mc.std_error) + ")");

    Rng hrng(mix_seed(opt.seed, 0x5A4u));
    std::vector<Eigen::MatrixXd> hs;
    hs.push_back((Eigen::MatrixXd(2, 2) << 2, 0, 0, 1).finished());
    hs.push_back(random_well_conditioned(2, hrng));
    bool all_pass = true;
    double worst = 0;
    for (const auto& h : hs) {
      IntertwineReport rep =
          check_intertwine_Q(h, nu, mu, f, 2, opt.budget, mix_seed(opt.seed, 0x5A5u), opt.workers);
      all_pass = all_pass && rep.pass;
      worst = std::max(worst, rep.max_rel_deviation);
    }
    c.check(all_pass, "two-route agreement within 3 sigma at (-3, 4) with common random numbers, max rel dev " +
                          fnum(worst));
  }
  return c.finish();
}

SuiteResult suite_convergence_regions(const SuiteOptions& opt) {
  Collector c("convergence-regions");

  // disjointness of the two regions on a 100 x 100 grid
  {
    bool overlap = false;
    for (int n = 1; n <= 4 && !overlap; ++n)
      for (int d = 1; d <= n && !overlap; ++d)
        for (int i = 0; i < 100 && !overlap; ++i)
          for (int j = 0; j < 100; ++j) {
            double nu0 = -10.0 + 20.0 * i / 99.0;
            double mu0 = -10.0 + 20.0 * j / 99.0;
            if (region_P(nu0, mu0, n, d) && region_Q(nu0, mu0, n, d)) {
              overlap = true;
              break;
            }
          }
    c.check(!overlap, "forward and reverse regions disjoint on a 10^4-point grid, n <= 4");
  }

  // inside the reverse region the kernel exponents are non-negative
  {
    bool expo_ok = true;
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= n; ++d)
        for (int i = 0; i < 40; ++i)
          for (int j = 0; j < 40; ++j) {
            double nu0 = -10.0 + 20.0 * i / 39.0;
            double mu0 = -10.0 + 20.0 * j / 39.0;
            if (!region_Q(nu0, mu0, n, d)) continue;
            double ab = 0.5 * (n - d - (nu0 + mu0));
            double b = 0.5 * (mu0 - n);
            if (ab < -1e-12 || b < -1e-12) expo_ok = false;
          }
    c.check(expo_ok, "reverse region implies alpha - beta >= 0 and beta >= 0 (continuous kernel)");
  }

  QuadratureSpec quad;
  quad.budget = opt.budget;
  quad.seed = mix_seed(opt.seed, 0x5B1u);
  quad.workers = opt.workers;

  // forward-side majorant at n = d = 1: E0 = nu + mu - 1, E0 + 2Einf = mu - nu + 1
  {
    const double grid[9][2] = {{4, -2}, {5, -2}, {2.5, -1}, {6, -1}, {0.5, 0},
                               {-1, 0}, {1, 1},  {1, 0.5},  {3, 2.5}};
    int wrong = 0;
    std::string detail;
    for (const auto& g : grid) {
      double nu0 = g[0], mu0 = g[1];
      double e0 = nu0 + mu0 - 1;
      double esum = mu0 - nu0 + 1;
      bool analytic_finite = e0 > 0 && esum < 0;
      BoundProbe probe = bound_estimate_P(nu0, mu0, 1, 1, 1, 0, quad);
      bool est_finite = !probe.divergence_suspected;
      if (est_finite != analytic_finite) {
        ++wrong;
        detail += " (" + fnum(nu0) + "," + fnum(mu0) + ")";
      }
    }
    c.check(wrong == 0, "forward majorant verdicts match the analytic 1-d criteria on the 9-point grid" + detail);
  }

  // reverse-side majorant at n = d = 1: E0 = 1 - (nu + mu), E0 + 2Einf = nu - mu - 1
  {
    const double grid[9][2] = {{-3, 3},   {-2, 2},    {0, 0.5},  {2, 0},      {1.5, 0},
                               {2, 0.5},  {0, -2},    {-1, -1.5}, {1, -0.5}};
    int wrong = 0;
    std::string detail;
    for (const auto& g : grid) {
      double nu0 = g[0], mu0 = g[1];
      double e0 = 1 - (nu0 + mu0);
      double esum = nu0 - mu0 - 1;
      bool analytic_finite = e0 > 0 && esum < 0;
      BoundProbe probe = bound_estimate_Q(nu0, mu0, 1, 1, quad);
      bool est_finite = !probe.divergence_suspected;
      if (est_finite != analytic_finite) {
        ++wrong;
        detail += " (" + fnum(nu0) + "," + fnum(mu0) + ")";
      }
    }
    c.check(wrong == 0, "reverse majorant verdicts match the analytic 1-d criteria on the 9-point grid" + detail);
  }

  // spot values at n=2, d=1 from both theorems' statements
  {
    bool ok = !bound_estimate_P(5, -2, 2, 1, 2, 0, quad).divergence_suspected &&
              !bound_estimate_Q(-3, 4, 2, 1, quad).divergence_suspected;
    c.check(ok, "majorants finite at the designated n=2, d=1 parameter points");
  }
  return c.finish();
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

struct Entry {
  const char* name;
  SuiteFn fn;
};

const Entry kSuites[] = {
    {"symplectic-identities", suite_symplectic},
    {"iwasawa", suite_iwasawa},
    {"orbit-census", suite_orbit_census},
    {"cell-action", suite_cell_action},
    {"double-flag", suite_double_flag},
    {"determinant-identities", suite_determinants},
    {"pochhammer", suite_pochhammer},
    {"operator-properties", suite_operator_properties},
    {"intertwine-P", suite_intertwine_P},
    {"intertwine-Q", suite_intertwine_Q},
    {"convergence-regions", suite_convergence_regions},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kSuites) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& e : kSuites)
    if (name == e.name) return e.fn(opt);
  throw ValidationError("unknown verification suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt) {
  std::vector<SuiteResult> out;
  for (const auto& e : kSuites) out.push_back(e.fn(opt));
  return out;
}

}  // namespace spflag
