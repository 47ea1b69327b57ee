#ifndef SPFLAG_PRINCIPAL_SERIES_HPP
#define SPFLAG_PRINCIPAL_SERIES_HPP

#include <array>
#include <complex>
#include <functional>
#include <optional>

#include "spflag/random.hpp"
#include "spflag/symplectic.hpp"

namespace spflag {

using Cplx = std::complex<double>;

/// Vector of the induced model for the big group, realized as a function on
/// symmetric matrices. `omega_support` records a declared signature stratum
/// the function vanishes off of; `interval_1d` records, when n = 1, a compact
/// support interval that enables deterministic quadrature in the operators.
struct GFunction {
  int n = 0;
  std::function<Cplx(const SymmetricMatrix&)> eval;
  std::optional<std::pair<int, int>> omega_support;
  std::optional<std::array<double, 2>> interval_1d;

  Cplx operator()(const SymmetricMatrix& z) const { return eval(z); }
};

GFunction g_zero(int n);
GFunction g_const(int n, Cplx value);
/// n = 1 indicator of [lo, hi].
GFunction g_indicator(double lo, double hi);
/// exp(-trace(z^2)) restricted to the signature stratum (p, q).
GFunction g_gaussian_on_omega(int n, int p, int q, const TolerancePolicy& tol = {});

/// Vector of the induced model for the Levi factor, realized on rank-d
/// n x d matrices y with the homogeneity law F(y k) = |det k|^{-mu} F(y).
struct LFunction {
  int n = 0;
  int d = 0;
  Cplx mu;
  std::function<Cplx(const Eigen::MatrixXd&)> eval;

  Cplx operator()(const Eigen::MatrixXd& y) const { return eval(y); }
};

LFunction l_zero(int n, int d, Cplx mu);
/// |det(ty y)|^{-mu/2}: the orthogonal-invariant vector, identically 1 on
/// orthonormal frames.
LFunction l_k_invariant(int n, int d, Cplx mu);
/// |det(top d x d block)|^{power} * |det(ty y)|^{-(mu + power)/2}: a
/// homogeneity-corrected minor monomial (|y_11|^{power}-based when d = 1).
LFunction l_entry_monomial(int n, int d, Cplx mu, int power);

struct ParamPair {
  Cplx nu;
  Cplx mu;
  double nu0() const { return nu.real(); }
  double mu0() const { return mu.real(); }
};

/// |det x|^nu on the Levi block of a parabolic element.
Cplx chi_PS(const SiegelParabolicElement& p, Cplx nu);

/// z -> |det(a + z c)|^{-nu} f(g^{-1} . z); chart singularities surface at
/// evaluation time as SingularDenominator. Levi elements preserve both
/// support descriptors; a general g clears them.
GFunction apply_piG(const SymplecticElement& g, Cplx nu, const GFunction& f,
                    const TolerancePolicy& tol = {});

/// y -> F(a^{-1} y) for invertible a.
LFunction apply_piL(const Eigen::MatrixXd& a, Cplx mu, const LFunction& f);

/// Estimate of the squared-norm integral
///   int |f(z)|^2 det(1 + z^2)^{nu0 - (n+1)/2} dz
/// by the radially-stratified polar sampler. Throws DivergenceSuspected when
/// the batch estimates grow by more than 1.5x across every doubling round.
McEstimate norm_G(const GFunction& f, double nu0, const QuadratureSpec& quad);

/// Column-orthonormal n x d matrix from the orthogonal-invariant
/// distribution (Gaussian matrix, thin QR, signs fixed by the R diagonal).
Eigen::MatrixXd sample_stiefel(int n, int d, Rng& rng);

/// Estimate of int |F(v)|^2 dsigma(v) over orthonormal frames, sigma
/// normalized to total mass 1.
McEstimate norm_L(const LFunction& f, std::size_t mc_budget, std::uint64_t seed, int workers = 1);

/// Convergence region of the forward kernel operator:
/// n nu0 + d mu0 > n(n+1)/2, n nu0 - d mu0 > n(n+1)/2 (strict), and
/// nu0 + mu0 >= n + 1, mu0 <= 0.
bool region_P(double nu0, double mu0, int n, int d);

/// Convergence region of the reverse kernel operator:
/// n nu0 + d mu0 < n(n+1)/2, n nu0 - d mu0 < n(n+1)/2 (strict), and
/// nu0 + mu0 <= n - d, mu0 >= n. When the spherical pair holds, the radial
/// pair is implied; the implementation asserts that consistency.
bool region_Q(double nu0, double mu0, int n, int d);

/// Signed margins of the four inequalities (positive = satisfied).
struct RegionMargins {
  double radial_plus = 0;   // n nu0 + d mu0 - n(n+1)/2, strict
  double radial_minus = 0;  // n nu0 - d mu0 - n(n+1)/2, strict
  double spherical_sum = 0;
  double spherical_mu = 0;
};
RegionMargins region_P_margins(double nu0, double mu0, int n, int d);
RegionMargins region_Q_margins(double nu0, double mu0, int n, int d);

/// det(1 + z^2)^expo for symmetric z, via eigenvalues.
double weight_det_one_plus_z2(const SymmetricMatrix& z, double expo);

}  // namespace spflag

#endif
