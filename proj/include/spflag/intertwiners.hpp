#ifndef SPFLAG_INTERTWINERS_HPP
#define SPFLAG_INTERTWINERS_HPP

#include "spflag/invariants.hpp"
#include "spflag/principal_series.hpp"

namespace spflag {

/// Kernel exponents (alpha, beta) together with the parameter dictionary
/// that produced them. Forward side: nu = 2 alpha, mu = -2 beta. Reverse
/// side: alpha = -(nu + d)/2, beta = (mu - n)/2.
struct KernelParams {
  enum class Side { P, Q };

  Cplx alpha;
  Cplx beta;
  Side side = Side::P;

  static KernelParams p_side(Cplx nu, Cplx mu);
  static KernelParams q_side(Cplx nu, Cplx mu, int n, int d);
  Cplx nu(int n, int d) const;
  Cplx mu(int n, int d) const;
};

/// Open stratum Omega(p, q) carrying the invariant measure
/// |det z|^{-(n+1)/2} dz.
struct OrbitIntegrationDomain {
  int n = 0;
  int p = 0;
  int q = 0;

  static OrbitIntegrationDomain make(int n, int p, int q);
};

/// Forward operator evaluated at one frame:
///   P f(y) = int_{Omega(p,q)} f(z) K^{alpha,beta}(z, y) |det z|^{-(n+1)/2} dz.
/// For n = 1 with a declared compact support interval the integral is done
/// by deterministic composite Gauss-Legendre quadrature (std_error 0);
/// otherwise by the seeded stratified sampler restricted to the stratum.
McEstimateC operator_P_at(const GFunction& f, Cplx alpha, Cplx beta,
                          const OrbitIntegrationDomain& dom, const QuadratureSpec& quad,
                          const Eigen::MatrixXd& y);

/// Forward operator as a frame function; satisfies
/// (P f)(y k) = |det k|^{2 beta} (P f)(y), i.e. homogeneity mu = -2 beta.
LFunction operator_P(const GFunction& f, Cplx alpha, Cplx beta, const OrbitIntegrationDomain& dom,
                     const QuadratureSpec& quad);

/// Reverse operator at one point: Q F(z) = E_{sigma}[F(y) K^{alpha,beta}(z, y)]
/// over orthonormal frames, exponents from the reverse dictionary. Defined
/// for invertible z and extended through the bordered-determinant route when
/// det z = 0 and Re(alpha - beta) >= 0; otherwise SingularZ.
McEstimateC operator_Q_at(const LFunction& f, Cplx nu, Cplx mu, std::size_t mc_budget,
                          std::uint64_t seed, int workers, const SymmetricMatrix& z);

GFunction operator_Q(const LFunction& f, Cplx nu, Cplx mu, std::size_t mc_budget,
                     std::uint64_t seed, int workers = 1);

struct IntertwineProbeRow {
  Cplx lhs;
  Cplx rhs;
  double se_lhs = 0;
  double se_rhs = 0;
  double deviation = 0;
  double rel_deviation = 0;
  double sigma_combined = 0;
  bool pass = false;
};

struct IntertwineReport {
  std::vector<IntertwineProbeRow> rows;
  double max_rel_deviation = 0;
  double max_deviation = 0;
  bool pass = false;
};

/// Two-route equivariance check for the forward operator at probe frames
/// drawn on the orthonormal manifold: compares P(pi^G(levi(h)) f) against
/// pi^L(h)(P f) with common random numbers (same z stream on both sides).
/// Requires nu = 2 alpha, mu = -2 beta and f supported in the domain.
IntertwineReport check_intertwine_P(const Eigen::MatrixXd& h, Cplx nu, Cplx mu, const GFunction& f,
                                    int d, int probes, const QuadratureSpec& quad);

/// Two-route equivariance check for the reverse operator at probe points of
/// the open strata: compares Q(pi^L(h) F) against pi^G(levi(h))(Q F).
/// Requires the reverse convergence region.
IntertwineReport check_intertwine_Q(const Eigen::MatrixXd& h, Cplx nu, Cplx mu, const LFunction& f,
                                    int probes, std::size_t mc_budget, std::uint64_t seed,
                                    int workers = 1);

/// Result of a convergence probe of a majorant integral.
struct BoundProbe {
  McEstimate estimate;
  std::vector<double> round_values;
  bool divergence_suspected = false;
};

/// Cauchy-Schwarz majorant for the forward operator at the reference frame
/// (first d coordinate columns):
///   int_{Omega(p,q)} |det z|^{nu+mu-(n+1)} |det[[z,y],[ty,0]]|^{-mu}
///                    det(1+z^2)^{-(nu-(n+1)/2)} dz.
BoundProbe bound_estimate_P(double nu0, double mu0, int n, int d, int p, int q,
                            const QuadratureSpec& quad);

/// Majorant for the reverse operator:
///   int_{S} int_{Sym_n} |det z|^{-(nu+mu)+n-d} |det[[z,y],[ty,0]]|^{mu-n}
///                       det(1+z^2)^{nu-(n+1)/2} dz dsigma(y).
BoundProbe bound_estimate_Q(double nu0, double mu0, int n, int d, const QuadratureSpec& quad);

}  // namespace spflag

#endif
