#ifndef SPFLAG_NUMERICS_HPP
#define SPFLAG_NUMERICS_HPP

#include <Eigen/Dense>

#include "spflag/errors.hpp"

namespace spflag {

/// Zero-band policy shared by every classifier: an eigenvalue (or singular
/// value) counts as zero iff |x| <= max(abs_floor, rel_eps * scale), where
/// scale is the spectral norm (largest singular value) of the matrix at hand.
struct TolerancePolicy {
  double rel_eps = 1e-9;
  double abs_floor = 1e-12;

  double band(double scale) const;
};

/// Eigenvalue counts of a real symmetric matrix, relative to a zero band.
struct Signature {
  int pos = 0;
  int neg = 0;
  int zero = 0;

  int n() const { return pos + neg + zero; }
  bool operator==(const Signature&) const = default;
};

/// Dense real symmetric matrix; the entries are symmetrized as (S + tS)/2 on
/// construction so downstream block formulas can rely on exact symmetry.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(const Eigen::MatrixXd& m);
  static SymmetricMatrix zero(int n) { return SymmetricMatrix(Eigen::MatrixXd::Zero(n, n)); }
  static SymmetricMatrix identity(int n) { return SymmetricMatrix(Eigen::MatrixXd::Identity(n, n)); }
  /// diag(1_p, -1_q, 0_{n-p-q})
  static SymmetricMatrix indefinite_identity(int n, int p, int q);

  int n() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Eigen::MatrixXd m_;
};

/// Eigenvalue signature of S, counted against the zero band.
/// Invariant under congruence S -> h S th for well-conditioned invertible h.
Signature signature(const SymmetricMatrix& s, const TolerancePolicy& tol = {});

/// Number of singular values above the zero band (band taken against the
/// largest singular value).
int rank_of(const Eigen::MatrixXd& m, const TolerancePolicy& tol = {});

/// Sorted eigenvalues of S (ascending). Throws NumericalError with a
/// condition report if the solver fails or the input is not finite.
Eigen::VectorXd sym_eigenvalues(const SymmetricMatrix& s);

/// Largest |eigenvalue| of a symmetric matrix (0 for the 0x0 matrix).
double spectral_norm(const SymmetricMatrix& s);

/// Principal square root of a symmetric positive definite matrix.
Eigen::MatrixXd sqrt_spd(const SymmetricMatrix& s);

/// True iff ||m - tm|| <= band scaled by ||m||.
bool is_symmetric_within(const Eigen::MatrixXd& m, const TolerancePolicy& tol = {});

/// Scale-invariant singularity test: |det m| against the product of row
/// norms (Hadamard bound). Returns true when m should be treated as
/// non-invertible under the policy.
bool determinant_in_zero_band(const Eigen::MatrixXd& m, const TolerancePolicy& tol = {});

}  // namespace spflag

#endif
