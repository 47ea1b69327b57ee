#ifndef SPFLAG_SYMPLECTIC_HPP
#define SPFLAG_SYMPLECTIC_HPP

#include <Eigen/Dense>

#include "spflag/numerics.hpp"

namespace spflag {

/// The form matrix [[0, -1_n], [1_n, 0]].
Eigen::MatrixXd symplectic_form(int n);

/// Membership test for the group preserving the form: both the Gram
/// criterion ||tg J g - J|| within tolerance and the block criterion
/// (ta c and tb d symmetric, ta d - tc b = 1) are evaluated and must agree;
/// a disagreement (possible only at the tolerance boundary) raises
/// NumericalError. Throws ValidationError on a non-square or odd-dimension
/// input.
bool is_symplectic(const Eigen::MatrixXd& g, const TolerancePolicy& tol = {});

/// Element of Sp(2n, R) in block form g = [[a, b], [c, d]].
class SymplecticElement {
 public:
  /// Validates membership; throws ValidationError if the test fails.
  static SymplecticElement from_matrix(const Eigen::MatrixXd& g, const TolerancePolicy& tol = {});
  static SymplecticElement identity(int n);
  /// [[h, 0], [0, th^{-1}]] for invertible h.
  static SymplecticElement levi(const Eigen::MatrixXd& h);
  /// [[1, z], [0, 1]]
  static SymplecticElement upper_unipotent(const SymmetricMatrix& z);
  /// [[1, 0], [z, 1]]
  static SymplecticElement lower_unipotent(const SymmetricMatrix& z);

  int half_dim() const { return n_; }
  const Eigen::MatrixXd& mat() const { return g_; }
  Eigen::MatrixXd a() const { return g_.topLeftCorner(n_, n_); }
  Eigen::MatrixXd b() const { return g_.topRightCorner(n_, n_); }
  Eigen::MatrixXd c() const { return g_.bottomLeftCorner(n_, n_); }
  Eigen::MatrixXd d() const { return g_.bottomRightCorner(n_, n_); }

  SymplecticElement operator*(const SymplecticElement& rhs) const;

  /// Wraps a matrix that is symplectic by construction, skipping the
  /// membership test (products, inverses, closed-form factors).
  static SymplecticElement unchecked(Eigen::MatrixXd g);

 private:
  SymplecticElement(Eigen::MatrixXd g, int n) : g_(std::move(g)), n_(n) {}
  Eigen::MatrixXd g_;
  int n_;
};

/// Inverse via the transpose-block formula [[td, -tb], [-tc, ta]].
SymplecticElement sp_inverse(const SymplecticElement& g);

/// Element p = [[x, z_blk], [0, tx^{-1}]] of the stabilizer of the standard
/// Lagrangian V+; requires x^{-1} z_blk symmetric.
class SiegelParabolicElement {
 public:
  static SiegelParabolicElement from_parts(const Eigen::MatrixXd& x, const Eigen::MatrixXd& z_blk,
                                           const TolerancePolicy& tol = {});
  static SiegelParabolicElement levi(const Eigen::MatrixXd& x);
  static SiegelParabolicElement identity(int n);

  int n() const { return static_cast<int>(x_.rows()); }
  const Eigen::MatrixXd& x() const { return x_; }
  const Eigen::MatrixXd& z_blk() const { return z_; }
  Eigen::MatrixXd mat() const;
  SymplecticElement to_symplectic() const;
  SiegelParabolicElement operator*(const SiegelParabolicElement& rhs) const;

 private:
  SiegelParabolicElement(Eigen::MatrixXd x, Eigen::MatrixXd z) : x_(std::move(x)), z_(std::move(z)) {}
  Eigen::MatrixXd x_, z_;
};

/// g^{-1} p g by the closed-form block formula (equals the triple product
/// within round-off).
SymplecticElement conjugate_parabolic(const SymplecticElement& g, const SiegelParabolicElement& p);

/// Maximal-compact membership: d = a, b = -c, ta b symmetric and
/// ta a + tb b = 1 (equivalently tg g = 1 together with the symplectic
/// condition; both routes are evaluated and must agree).
bool is_in_K(const SymplecticElement& g, const TolerancePolicy& tol = {});

/// Coset representative w_k: -1_{n-k} in the upper-right corner, 1_k in the
/// upper-middle diagonal block, 1_{n-k} lower-left, 1_k lower-right.
/// w_0 is the form matrix J, w_n the identity.
struct WeylRep {
  int n = 0;
  int k = 0;
  Eigen::MatrixXd matrix;
};
WeylRep weyl_rep(int n, int k);

/// Linear fractional action z -> -(a z - b)(c z - d)^{-1}. Throws
/// SingularDenominator when det(c z - d) lies in the zero band (scale taken
/// against the product of row norms): z is outside this element's chart.
SymmetricMatrix fractional_action(const SymplecticElement& g, const SymmetricMatrix& z,
                                  const TolerancePolicy& tol = {});

/// KAN factors of v(z) = [[1,0],[z,1]] with h = sqrt(1 + z^2):
///   k = [[h^{-1}, -h^{-1} z], [h^{-1} z, h^{-1}]],  ma = [[h,0],[0,h^{-1}]],
///   n = [[1, h^{-1} z h^{-1}], [0,1]],  alpha = det(1+z^2)^{1/2n}.
struct IwasawaVz {
  SymplecticElement k;
  SymplecticElement ma;
  SymplecticElement n_elem;
  double alpha;
};
IwasawaVz iwasawa_vz(const SymmetricMatrix& z);

}  // namespace spflag

#endif
