#ifndef SPFLAG_LAGRANGIAN_HPP
#define SPFLAG_LAGRANGIAN_HPP

#include <vector>

#include "spflag/symplectic.hpp"

namespace spflag {

/// True iff the 2n x n matrix has full column rank and isotropic column
/// span (tF_low F_up symmetric within tolerance).
bool is_lagrangian(const Eigen::MatrixXd& stacked, const TolerancePolicy& tol = {});

/// A Lagrangian subspace given by a full-rank 2n x n frame, split into the
/// components along the standard polarization.
class LagrangianFrame {
 public:
  static LagrangianFrame from_parts(const Eigen::MatrixXd& f_up, const Eigen::MatrixXd& f_low,
                                    const TolerancePolicy& tol = {});
  static LagrangianFrame from_stacked(const Eigen::MatrixXd& stacked, const TolerancePolicy& tol = {});

  int n() const { return static_cast<int>(up_.cols()); }
  const Eigen::MatrixXd& upper() const { return up_; }
  const Eigen::MatrixXd& lower() const { return low_; }
  Eigen::MatrixXd stacked() const;

  /// Same subspace in a different basis (g invertible n x n).
  LagrangianFrame with_basis(const Eigen::MatrixXd& g) const;

 private:
  LagrangianFrame(Eigen::MatrixXd up, Eigen::MatrixXd low) : up_(std::move(up)), low_(std::move(low)) {}
  Eigen::MatrixXd up_, low_;
};

/// Graph frame { (z x, x) }: F_up = z, F_low = 1.
LagrangianFrame frame_from_z(const SymmetricMatrix& z);

/// Left action of the group on the subspace; the returned frame is
/// re-orthonormalized (frames represent subspaces, so a basis change is
/// allowed and keeps later classifications well-conditioned).
LagrangianFrame act(const SymplecticElement& g, const LagrangianFrame& frame);

/// k = n - rank(F_low) = dim(span intersect V+).
int bruhat_index(const LagrangianFrame& frame, const TolerancePolicy& tol = {});

/// Complete orbit label (k; r, s) under the Levi action.
struct LambdaOrbitLabel {
  int k = 0;
  int r = 0;
  int s = 0;
  bool operator==(const LambdaOrbitLabel&) const = default;
};

/// Classifies the orbit through the frame: k as above, plus the signature of
/// the congruence-invariant form B = tF_low F_up (symmetric by isotropy).
/// Convention: the canonical frame for (k; r, s) has B = diag(-1_r, 1_s, 0),
/// so r counts the negative and s the positive eigenvalues of B.
LambdaOrbitLabel orbit_invariant(const LagrangianFrame& frame, const TolerancePolicy& tol = {});

/// Canonical frame for the label: upper part [[-zeta, 0], [0, 1_k]] with
/// zeta = diag(1_r, -1_s, 0) of size n-k, lower part [[1_{n-k}, 0], [0, 0]].
LagrangianFrame representative_frame(int n, int k, int r, int s);

/// All labels with 0 <= k <= n, r, s >= 0, r + s <= n - k; the count with a
/// fixed k is binom(n-k+2, 2).
std::vector<LambdaOrbitLabel> enumerate_orbit_labels(int n);

/// Point of the affine cell with index k: eta = [[zeta, xi], [txi, 0_k]].
struct CellPoint {
  int n = 0;
  int k = 0;
  Eigen::MatrixXd zeta;  // (n-k) x (n-k) symmetric
  Eigen::MatrixXd xi;    // (n-k) x k

  static CellPoint make(int n, int k, const SymmetricMatrix& zeta, const Eigen::MatrixXd& xi);
  SymmetricMatrix eta() const;
};

/// Blocks of an invertible n x n matrix partitioned by (n-k, k).
struct LeviBlocks {
  Eigen::MatrixXd h1, h2, h3, h4;
  static LeviBlocks split(const Eigen::MatrixXd& h, int k);
  Eigen::MatrixXd join() const;
};

/// Closed-form cell action: B = (-h2 + h1 xi)(h4 - h3 xi)^{-1},
/// A = (h1 + B h3) zeta t(h1 + B h3). Throws SingularDenominator when the
/// point leaves the chart.
CellPoint l_action_on_cell(const LeviBlocks& h, const CellPoint& pt, const TolerancePolicy& tol = {});

/// Conjugated block matrix through which the Levi factor acts on the k-th
/// cell; used as the frame-level route for cross-checking the closed form.
Eigen::MatrixXd cell_action_matrix(const Eigen::MatrixXd& h, int n, int k);

/// Membership in the stabilizer of the canonical cell point for the label:
/// block-lower-triangular shape (h2 = 0) with h1 zeta th1 = zeta.
bool stabilizer_membership(const Eigen::MatrixXd& h, const LambdaOrbitLabel& label,
                           const TolerancePolicy& tol = {});

}  // namespace spflag

#endif
