#include "spflag/intertwiners.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace spflag {

namespace {

// 16-point Gauss-Legendre rule on [-1, 1].
constexpr int kGL = 8;
constexpr double kGLx[kGL] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                              0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                              0.9445750230732326, 0.9894009349916499};
constexpr double kGLw[kGL] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                              0.1495959888165768, 0.1246289712555339, 0.0951585116824928,
                              0.0622535239386479, 0.0271524594117541};
constexpr int kPanels = 48;

Cplx cpow_pos(double base, Cplx e) {
  if (e.imag() == 0.0) return {std::pow(base, e.real()), 0.0};
  return std::exp(e * std::log(base));
}

/// |base|^expo with the 0-base conventions needed by the majorants:
/// 0^positive = 0, 0^0 = 1, 0^negative = +inf.
double pow_abs(double base, double expo) {
  double b = std::abs(base);
  if (b == 0.0) {
    if (expo > 0) return 0.0;
    if (expo == 0) return 1.0;
    return std::numeric_limits<double>::infinity();
  }
  return std::pow(b, expo);
}

/// Kernel value with the bordered-determinant extension across det z = 0.
Cplx kernel_extended(const SymmetricMatrix& z, const Eigen::MatrixXd& y, Cplx alpha, Cplx beta) {
  double detz = std::abs(z.mat().determinant());
  double blk = std::abs(block_determinant(z, y));
  Cplx ab = alpha - beta;
  Cplx first;
  if (detz == 0.0) {
    if (ab == Cplx(0.0, 0.0))
      first = 1.0;
    else if (ab.real() > 0.0)
      first = 0.0;
    else
      throw SingularZ("kernel: det z = 0 with Re(alpha - beta) < 0");
  } else {
    first = cpow_pos(detz, ab);
  }
  Cplx second;
  if (blk == 0.0)
    second = (beta == Cplx(0.0, 0.0)) ? Cplx(1.0, 0.0)
             : (beta.real() > 0.0)    ? Cplx(0.0, 0.0)
                                      : Cplx(std::numeric_limits<double>::infinity(), 0.0);
  else
    second = cpow_pos(blk, beta);
  return first * second;
}

bool in_stratum(const SymmetricMatrix& z, int p, int q, const TolerancePolicy& tol) {
  Signature sig = signature(z, tol);
  return sig.pos == p && sig.neg == q;
}

void check_probe_frame(const Eigen::MatrixXd& y, int n, int d) {
  if (y.rows() != n || y.cols() != d)
    throw ValidationError("operator: probe frame must be n x d");
  if (rank_of(y) != d) throw RankDeficientY("operator: probe frame is rank-deficient");
}

McEstimateC quadrature_P_1d(const GFunction& f, Cplx alpha, Cplx beta,
                            const OrbitIntegrationDomain& dom, const Eigen::MatrixXd& y) {
  double lo = (*f.interval_1d)[0];
  double hi = (*f.interval_1d)[1];
  // restrict to the stratum: z > 0 for (1,0), z < 0 for (0,1)
  if (dom.p == 1)
    lo = std::max(lo, 0.0);
  else
    hi = std::min(hi, 0.0);
  McEstimateC out;
  out.samples = 0;
  if (!(lo < hi)) return out;
  Cplx sum = 0.0;
  double width = (hi - lo) / kPanels;
  for (int panel = 0; panel < kPanels; ++panel) {
    double mid = lo + (panel + 0.5) * width;
    double half = 0.5 * width;
    for (int i = 0; i < kGL; ++i) {
      for (double sgn : {-1.0, 1.0}) {
        double zv = mid + sgn * half * kGLx[i];
        SymmetricMatrix z((Eigen::MatrixXd(1, 1) << zv).finished());
        Cplx val = f.eval(z) * kernel_extended(z, y, alpha, beta) * pow_abs(zv, -1.0);
        sum += kGLw[i] * half * val;
        ++out.samples;
      }
    }
  }
  out.value = sum;
  out.std_error = 0.0;
  return out;
}

}  // namespace

KernelParams KernelParams::p_side(Cplx nu, Cplx mu) {
  return {0.5 * nu, -0.5 * mu, Side::P};
}

KernelParams KernelParams::q_side(Cplx nu, Cplx mu, int n, int d) {
  return {-0.5 * (nu + static_cast<double>(d)), 0.5 * (mu - static_cast<double>(n)), Side::Q};
}

Cplx KernelParams::nu(int n, int d) const {
  return side == Side::P ? 2.0 * alpha : -2.0 * alpha - static_cast<double>(d);
}

Cplx KernelParams::mu(int n, int d) const {
  return side == Side::P ? -2.0 * beta : 2.0 * beta + static_cast<double>(n);
}

OrbitIntegrationDomain OrbitIntegrationDomain::make(int n, int p, int q) {
  if (n < 1 || p < 0 || q < 0 || p + q != n)
    throw ValidationError("OrbitIntegrationDomain: need p + q = n");
  return {n, p, q};
}

McEstimateC operator_P_at(const GFunction& f, Cplx alpha, Cplx beta,
                          const OrbitIntegrationDomain& dom, const QuadratureSpec& quad,
                          const Eigen::MatrixXd& y) {
  if (f.n != dom.n) throw ValidationError("operator_P_at: dimension mismatch");
  int d = static_cast<int>(y.cols());
  check_probe_frame(y, dom.n, d);

  if (dom.n == 1 && f.interval_1d) return quadrature_P_1d(f, alpha, beta, dom, y);

  TolerancePolicy tol;
  double half_np1 = 0.5 * (dom.n + 1);
  auto integrand = [&](const Eigen::MatrixXd& zm, Rng&) -> Cplx {
    SymmetricMatrix z(zm);
    if (!in_stratum(z, dom.p, dom.q, tol)) return {0.0, 0.0};
    Cplx fv;
    try {
      fv = f.eval(z);
    } catch (const SingularDenominator&) {
      return {0.0, 0.0};
    }
    if (fv == Cplx(0.0, 0.0)) return {0.0, 0.0};
    double detz = std::abs(zm.determinant());
    return fv * kernel_extended(z, y, alpha, beta) * pow_abs(detz, -half_np1);
  };
  return integrate_sym_complex(dom.n, quad, integrand);
}

LFunction operator_P(const GFunction& f, Cplx alpha, Cplx beta, const OrbitIntegrationDomain& dom,
                     const QuadratureSpec& quad) {
  LFunction out;
  out.n = dom.n;
  out.d = 0;  // any column count is accepted; homogeneity fixes the law
  out.mu = -2.0 * beta;
  out.eval = [f, alpha, beta, dom, quad](const Eigen::MatrixXd& y) {
    return operator_P_at(f, alpha, beta, dom, quad, y).value;
  };
  return out;
}

McEstimateC operator_Q_at(const LFunction& f, Cplx nu, Cplx mu, std::size_t mc_budget,
                          std::uint64_t seed, int workers, const SymmetricMatrix& z) {
  KernelParams kp = KernelParams::q_side(nu, mu, f.n, f.d);
  QuadratureSpec spec;
  spec.budget = mc_budget;
  spec.seed = seed;
  spec.workers = workers;
  int n = f.n, d = f.d;
  return mc_mean_complex(spec, [&f, &z, kp, n, d](Rng& rng) {
    Eigen::MatrixXd y = sample_stiefel(n, d, rng);
    return f.eval(y) * kernel_extended(z, y, kp.alpha, kp.beta);
  });
}

GFunction operator_Q(const LFunction& f, Cplx nu, Cplx mu, std::size_t mc_budget,
                     std::uint64_t seed, int workers) {
  GFunction out;
  out.n = f.n;
  out.eval = [f, nu, mu, mc_budget, seed, workers](const SymmetricMatrix& z) {
    return operator_Q_at(f, nu, mu, mc_budget, seed, workers, z).value;
  };
  return out;
}

namespace {

IntertwineProbeRow make_row(const McEstimateC& lhs, const McEstimateC& rhs) {
  IntertwineProbeRow row;
  row.lhs = lhs.value;
  row.rhs = rhs.value;
  row.se_lhs = lhs.std_error;
  row.se_rhs = rhs.std_error;
  row.deviation = std::abs(lhs.value - rhs.value);
  double scale = std::max(std::abs(lhs.value), std::abs(rhs.value));
  row.rel_deviation = (scale > 0) ? row.deviation / scale : 0.0;
  double comb = std::sqrt(lhs.std_error * lhs.std_error + rhs.std_error * rhs.std_error);
  row.sigma_combined = comb;
  row.pass = row.deviation <= 3.0 * comb + 1e-10 * std::max(1.0, scale);
  return row;
}

IntertwineReport finish_report(std::vector<IntertwineProbeRow> rows) {
  IntertwineReport rep;
  rep.rows = std::move(rows);
  rep.pass = true;
  for (const auto& r : rep.rows) {
    rep.max_rel_deviation = std::max(rep.max_rel_deviation, r.rel_deviation);
    rep.max_deviation = std::max(rep.max_deviation, r.deviation);
    rep.pass = rep.pass && r.pass;
  }
  return rep;
}

}  // namespace

IntertwineReport check_intertwine_P(const Eigen::MatrixXd& h, Cplx nu, Cplx mu, const GFunction& f,
                                    int d, int probes, const QuadratureSpec& quad) {
  if (!f.omega_support)
    throw ValidationError("check_intertwine_P: f must declare its stratum support");
  if (h.rows() != f.n || h.cols() != f.n)
    throw ValidationError("check_intertwine_P: h must be n x n");
  KernelParams kp = KernelParams::p_side(nu, mu);
  OrbitIntegrationDomain dom =
      OrbitIntegrationDomain::make(f.n, f.omega_support->first, f.omega_support->second);

  GFunction moved = apply_piG(SymplecticElement::levi(h), nu, f);
  Eigen::MatrixXd hinv = h.partialPivLu().inverse();
  if (!hinv.allFinite()) throw ValidationError("check_intertwine_P: h must be invertible");

  std::vector<IntertwineProbeRow> rows;
  for (int i = 0; i < probes; ++i) {
    Rng rng(mix_seed(quad.seed, 0x9E0Bu, static_cast<std::uint64_t>(i)));
    Eigen::MatrixXd y = sample_stiefel(f.n, d, rng);
    McEstimateC lhs = operator_P_at(moved, kp.alpha, kp.beta, dom, quad, y);
    McEstimateC rhs = operator_P_at(f, kp.alpha, kp.beta, dom, quad, hinv * y);
    rows.push_back(make_row(lhs, rhs));
  }
  return finish_report(std::move(rows));
}

IntertwineReport check_intertwine_Q(const Eigen::MatrixXd& h, Cplx nu, Cplx mu, const LFunction& f,
                                    int probes, std::size_t mc_budget, std::uint64_t seed,
                                    int workers) {
  if (h.rows() != f.n || h.cols() != f.n)
    throw ValidationError("check_intertwine_Q: h must be n x n");
  if (!region_Q(nu.real(), mu.real(), f.n, f.d))
    throw ValidationError("check_intertwine_Q: (nu0, mu0) is outside the reverse convergence region");
  Eigen::MatrixXd hinv = h.partialPivLu().inverse();
  if (!hinv.allFinite()) throw ValidationError("check_intertwine_Q: h must be invertible");

  LFunction moved = apply_piL(h, mu, f);
  double abs_det_h = std::abs(h.determinant());
  TolerancePolicy tol;

  std::vector<IntertwineProbeRow> rows;
  for (int i = 0; i < probes; ++i) {
    Rng rng(mix_seed(seed, 0x2137u, static_cast<std::uint64_t>(i)));
    SymmetricMatrix z = SymmetricMatrix::zero(f.n);
    for (;;) {
      double u = 0.3 + 0.4 * rng.uniform();  // moderate radius band for probes
      SymSample s = sample_sym_polar(f.n, u, rng);
      z = SymmetricMatrix(s.z);
      if (signature(z, tol).zero == 0) break;
    }
    McEstimateC lhs = operator_Q_at(moved, nu, mu, mc_budget, seed, workers, z);
    SymmetricMatrix z_moved(hinv * z.mat() * hinv.transpose());
    McEstimateC rhs = operator_Q_at(f, nu, mu, mc_budget, seed, workers, z_moved);
    Cplx factor = cpow_pos(abs_det_h, -nu);
    rhs.value *= factor;
    rhs.std_error *= std::abs(factor);
    rows.push_back(make_row(lhs, rhs));
  }
  return finish_report(std::move(rows));
}

BoundProbe bound_estimate_P(double nu0, double mu0, int n, int d, int p, int q,
                            const QuadratureSpec& quad) {
  OrbitIntegrationDomain dom = OrbitIntegrationDomain::make(n, p, q);
  if (d < 1 || d > n) throw ValidationError("bound_estimate_P: need 1 <= d <= n");
  Eigen::MatrixXd y = Eigen::MatrixXd::Identity(n, d);
  TolerancePolicy tol;
  double e_det = nu0 + mu0 - (n + 1);
  double e_weight = -(nu0 - 0.5 * (n + 1));
  auto integrand = [&](const Eigen::MatrixXd& zm, Rng&) -> double {
    SymmetricMatrix z(zm);
    if (!in_stratum(z, dom.p, dom.q, tol)) return 0.0;
    double detz = zm.determinant();
    double blk = block_determinant(z, y);
    return pow_abs(detz, e_det) * pow_abs(blk, -mu0) * weight_det_one_plus_z2(z, e_weight);
  };
  IntegralProbe probe = integrate_sym_probed(n, quad, integrand);
  return {probe.estimate, probe.round_values, probe.divergence_suspected};
}

BoundProbe bound_estimate_Q(double nu0, double mu0, int n, int d, const QuadratureSpec& quad) {
  if (d < 1 || d > n) throw ValidationError("bound_estimate_Q: need 1 <= d <= n");
  double e_det = -(nu0 + mu0) + n - d;
  double e_blk = mu0 - n;
  double e_weight = nu0 - 0.5 * (n + 1);
  auto integrand = [&](const Eigen::MatrixXd& zm, Rng& rng) -> double {
    SymmetricMatrix z(zm);
    Eigen::MatrixXd y = sample_stiefel(n, d, rng);
    double detz = zm.determinant();
    double blk = block_determinant(z, y);
    return pow_abs(detz, e_det) * pow_abs(blk, e_blk) * weight_det_one_plus_z2(z, e_weight);
  };
  IntegralProbe probe = integrate_sym_probed(n, quad, integrand);
  return {probe.estimate, probe.round_values, probe.divergence_suspected};
}

}  // namespace spflag
