#ifndef SPFLAG_INVARIANTS_HPP
#define SPFLAG_INVARIANTS_HPP

#include <complex>
#include <vector>

#include "spflag/numerics.hpp"

namespace spflag {

/// Character exponent pair for the relative-invariant family
/// psi1^{m1} psi2^{m2}.
struct CharacterPair {
  long m1 = 0;
  long m2 = 0;
};

/// chi1(h, m) = (det h)^2 and chi2(h, m) = (det h)^2 (det m)^2, the
/// multipliers of psi1 and psi2 under (z, y) -> (h z th, h y tm).
double chi1(const Eigen::MatrixXd& h, const Eigen::MatrixXd& m);
double chi2(const Eigen::MatrixXd& h, const Eigen::MatrixXd& m);

/// psi1(z, y) = det z  (y enters only through the common signature).
double psi1(const SymmetricMatrix& z, const Eigen::MatrixXd& y);

/// det of the bordered matrix [[z, y], [ty, 0]].
double block_determinant(const SymmetricMatrix& z, const Eigen::MatrixXd& y);

/// psi2(z, y) = det z * det(ty z^{-1} y), evaluated as the polynomial
/// (-1)^d det[[z, y], [ty, 0]] so it stays finite across det z = 0.
double psi2(const SymmetricMatrix& z, const Eigen::MatrixXd& y);

/// Product-form route for psi2; requires invertible z (throws SingularZ).
/// Kept separate so the two routes can be compared.
double psi2_product_route(const SymmetricMatrix& z, const Eigen::MatrixXd& y,
                          const TolerancePolicy& tol = {});

/// |det z|^alpha |det(ty z^{-1} y)|^beta computed through the bordered
/// determinant: |det z|^{alpha-beta} |det[[z,y],[ty,0]]|^beta. Throws
/// SingularZ when z has an eigenvalue in the zero band.
double kernel_K(const SymmetricMatrix& z, const Eigen::MatrixXd& y, double alpha, double beta,
                const TolerancePolicy& tol = {});
std::complex<double> kernel_K(const SymmetricMatrix& z, const Eigen::MatrixXd& y,
                              std::complex<double> alpha, std::complex<double> beta,
                              const TolerancePolicy& tol = {});

/// Signed variant for integer exponents: the same bordered-determinant
/// product with the absolute values dropped,
/// det(z)^{alpha-beta} det[[z,y],[ty,0]]^beta. Differs from
/// psi1^{m1} psi2^{m2} at (alpha, beta) = (m1+m2, m2) exactly by (-1)^{d m2}.
double kernel_K_signed(const SymmetricMatrix& z, const Eigen::MatrixXd& y, long alpha, long beta,
                       const TolerancePolicy& tol = {});

/// Sum over d-element row/column subsets I, J of
/// det(z_{I,J}) det(y_{I,*}) det(y_{J,*}); equals det(ty z y).
/// Guarded to n <= 12 (the term count is binom(n,d)^2); terms are combined
/// by pairwise summation in a fixed order.
double minor_expansion(const SymmetricMatrix& z, const Eigen::MatrixXd& y);

/// Weakly decreasing multi-index alpha_1 >= ... >= alpha_n >= 0.
struct MultiIndex {
  std::vector<long> parts;

  static MultiIndex of(std::vector<long> parts);
  int length() const { return static_cast<int>(parts.size()); }
};

/// Rising factorial x (x+1) ... (x+k-1).
double rising_factorial(double x, long k);

/// Product of shifted rising factorials prod_i (nu - (i-1)/2)_{alpha_i}.
double pochhammer_general(double nu, const MultiIndex& a);

/// For a non-positive integer nu: vanishing of the product above, which
/// happens exactly when alpha_1 > -nu.
bool pochhammer_vanishes(long nu, const MultiIndex& a);

}  // namespace spflag

#endif
