#include "spflag/principal_series.hpp"

#include <cmath>
#include <sstream>

namespace spflag {

namespace {

Cplx cpow_pos(double base, Cplx e) {
  if (e.imag() == 0.0) return {std::pow(base, e.real()), 0.0};
  return std::exp(e * std::log(base));
}

}  // namespace

GFunction g_zero(int n) {
  return {n, [](const SymmetricMatrix&) { return Cplx(0.0, 0.0); }, std::nullopt, std::nullopt};
}

GFunction g_const(int n, Cplx value) {
  return {n, [value](const SymmetricMatrix&) { return value; }, std::nullopt, std::nullopt};
}

GFunction g_indicator(double lo, double hi) {
  if (!(lo < hi)) throw ValidationError("g_indicator: need lo < hi");
  GFunction f;
  f.n = 1;
  f.eval = [lo, hi](const SymmetricMatrix& z) {
    double v = z(0, 0);
    return (v >= lo && v <= hi) ? Cplx(1.0, 0.0) : Cplx(0.0, 0.0);
  };
  f.interval_1d = {{lo, hi}};
  int p = (lo > 0) ? 1 : 0;
  int q = (hi < 0) ? 1 : 0;
  if (p + q == 1) f.omega_support = {{p, q}};
  return f;
}

GFunction g_gaussian_on_omega(int n, int p, int q, const TolerancePolicy& tol) {
  if (p < 0 || q < 0 || p + q != n)
    throw ValidationError("g_gaussian_on_omega: need p + q = n");
  GFunction f;
  f.n = n;
  f.omega_support = {{p, q}};
  f.eval = [p, q, tol](const SymmetricMatrix& z) {
    Signature sig = signature(z, tol);
    if (sig.pos != p || sig.neg != q) return Cplx(0.0, 0.0);
    return Cplx(std::exp(-z.mat().squaredNorm()), 0.0);
  };
  if (n == 1) {
    // single-signature support is a half line; no compact interval
    f.interval_1d = std::nullopt;
  }
  return f;
}

LFunction l_zero(int n, int d, Cplx mu) {
  return {n, d, mu, [](const Eigen::MatrixXd&) { return Cplx(0.0, 0.0); }};
}

LFunction l_k_invariant(int n, int d, Cplx mu) {
  LFunction f;
  f.n = n;
  f.d = d;
  f.mu = mu;
  f.eval = [mu](const Eigen::MatrixXd& y) {
    double g = (y.transpose() * y).determinant();
    if (g <= 0.0) throw RankDeficientY("l_k_invariant: rank-deficient argument");
    return cpow_pos(g, -0.5 * mu);
  };
  return f;
}

LFunction l_entry_monomial(int n, int d, Cplx mu, int power) {
  LFunction f;
  f.n = n;
  f.d = d;
  f.mu = mu;
  f.eval = [d, mu, power](const Eigen::MatrixXd& y) {
    double g = (y.transpose() * y).determinant();
    if (g <= 0.0) throw RankDeficientY("l_entry_monomial: rank-deficient argument");
    // det of the top d x d block picks up det(k) under y -> y k, so the
    // combination below scales by |det k|^{-mu} exactly
    double top = std::abs(y.topRows(d).determinant());
    double num = std::pow(top, power);
    return num * cpow_pos(g, -0.5 * (mu + static_cast<double>(power)));
  };
  return f;
}

Cplx chi_PS(const SiegelParabolicElement& p, Cplx nu) {
  double det = std::abs(p.x().determinant());
  if (det == 0.0) throw ValidationError("chi_PS: Levi block is singular");
  return cpow_pos(det, nu);
}

GFunction apply_piG(const SymplecticElement& g, Cplx nu, const GFunction& f,
                    const TolerancePolicy& tol) {
  if (g.half_dim() != f.n)
    throw ValidationError("apply_piG: dimension mismatch");
  SymplecticElement ginv = sp_inverse(g);
  Eigen::MatrixXd a = g.a(), c = g.c();

  GFunction out;
  out.n = f.n;
  out.eval = [a, c, ginv, nu, f, tol](const SymmetricMatrix& z) {
    double det = std::abs((a + z.mat() * c).determinant());
    if (det == 0.0)
      throw SingularDenominator("apply_piG: det(a + z c) = 0 at the evaluation point");
    return cpow_pos(det, -nu) * f.eval(fractional_action(ginv, z, tol));
  };

  // A Levi element z -> h z th preserves the signature stratum and maps a
  // 1-d interval to its scaled image; anything else clears the descriptors.
  bool is_levi = g.b().norm() == 0.0 && g.c().norm() == 0.0;
  if (is_levi) {
    out.omega_support = f.omega_support;
    if (f.interval_1d && f.n == 1) {
      double h2 = g.a()(0, 0) * g.a()(0, 0);
      out.interval_1d = {{(*f.interval_1d)[0] * h2, (*f.interval_1d)[1] * h2}};
    }
  }
  return out;
}

LFunction apply_piL(const Eigen::MatrixXd& a, Cplx mu, const LFunction& f) {
  if (a.rows() != f.n || a.cols() != f.n)
    throw ValidationError("apply_piL: a must be n x n");
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  Eigen::MatrixXd ainv = lu.inverse();
  if (!ainv.allFinite())
    throw ValidationError("apply_piL: a must be invertible");
  LFunction out;
  out.n = f.n;
  out.d = f.d;
  out.mu = mu;
  out.eval = [ainv, f](const Eigen::MatrixXd& y) { return f.eval(ainv * y); };
  return out;
}

double weight_det_one_plus_z2(const SymmetricMatrix& z, double expo) {
  Eigen::VectorXd lam = sym_eigenvalues(z);
  double log_det = (lam.array().square() + 1.0).log().sum();
  return std::exp(expo * log_det);
}

McEstimate norm_G(const GFunction& f, double nu0, const QuadratureSpec& quad) {
  double expo = nu0 - 0.5 * (f.n + 1);
  auto integrand = [&](const Eigen::MatrixXd& zm, Rng&) -> double {
    SymmetricMatrix z(zm);
    Cplx v;
    try {
      v = f.eval(z);
    } catch (const SingularDenominator&) {
      return 0.0;  // chart boundary has measure zero
    }
    double sq = std::norm(v);
    if (sq == 0.0) return 0.0;
    return sq * weight_det_one_plus_z2(z, expo);
  };
  IntegralProbe probe = integrate_sym_probed(f.n, quad, integrand);
  if (probe.divergence_suspected) {
    std::ostringstream os;
    os << "norm_G: batch estimates grew by >1.5x across every doubling round";
    throw DivergenceSuspected(os.str(), probe.round_values);
  }
  return probe.estimate;
}

Eigen::MatrixXd sample_stiefel(int n, int d, Rng& rng) {
  if (d < 1 || d > n)
    throw ValidationError("sample_stiefel: need 1 <= d <= n");
  for (;;) {
    Eigen::MatrixXd g = rng.gaussian_matrix(n, d);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, d);
    Eigen::MatrixXd r = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
    bool ok = true;
    for (int j = 0; j < d; ++j) {
      if (r(j, j) == 0.0) {
        ok = false;
        break;
      }
      if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    }
    if (ok) return q;
  }
}

McEstimate norm_L(const LFunction& f, std::size_t mc_budget, std::uint64_t seed, int workers) {
  QuadratureSpec spec;
  spec.budget = mc_budget;
  spec.seed = seed;
  spec.workers = workers;
  int n = f.n, d = f.d;
  return mc_mean(spec, [&f, n, d](Rng& rng) {
    return std::norm(f.eval(sample_stiefel(n, d, rng)));
  });
}

RegionMargins region_P_margins(double nu0, double mu0, int n, int d) {
  double half = 0.5 * n * (n + 1);
  return {n * nu0 + d * mu0 - half, n * nu0 - d * mu0 - half, nu0 + mu0 - (n + 1), -mu0};
}

RegionMargins region_Q_margins(double nu0, double mu0, int n, int d) {
  double half = 0.5 * n * (n + 1);
  return {half - (n * nu0 + d * mu0), half - (n * nu0 - d * mu0), (n - d) - (nu0 + mu0), mu0 - n};
}

bool region_P(double nu0, double mu0, int n, int d) {
  if (n < 1 || d < 1 || d > n) throw ValidationError("region_P: need 1 <= d <= n");
  RegionMargins m = region_P_margins(nu0, mu0, n, d);
  return m.radial_plus > 0 && m.radial_minus > 0 && m.spherical_sum >= 0 && m.spherical_mu >= 0;
}

bool region_Q(double nu0, double mu0, int n, int d) {
  if (n < 1 || d < 1 || d > n) throw ValidationError("region_Q: need 1 <= d <= n");
  RegionMargins m = region_Q_margins(nu0, mu0, n, d);
  bool spherical = m.spherical_sum >= 0 && m.spherical_mu >= 0;
  bool radial = m.radial_plus > 0 && m.radial_minus > 0;
  if (spherical && !radial)
    throw NumericalError("region_Q: spherical inequalities hold but radial ones fail (internal inconsistency)");
  return spherical && radial;
}

}  // namespace spflag
