#include "spflag/lagrangian.hpp"

#include <cmath>
#include <sstream>

namespace spflag {

namespace {

Eigen::MatrixXd zeta_of(int m, int r, int s) {
  if (r < 0 || s < 0 || r + s > m)
    throw ValidationError("orbit label: need r, s >= 0 and r + s <= n - k");
  Eigen::VectorXd d = Eigen::VectorXd::Zero(m);
  d.head(r).setOnes();
  d.segment(r, s).setConstant(-1.0);
  return Eigen::MatrixXd(d.asDiagonal());
}

}  // namespace

bool is_lagrangian(const Eigen::MatrixXd& stacked, const TolerancePolicy& tol) {
  if (stacked.rows() == 0 || stacked.rows() % 2 != 0 || stacked.cols() != stacked.rows() / 2)
    return false;
  int n = static_cast<int>(stacked.cols());
  if (rank_of(stacked, tol) != n) return false;
  Eigen::MatrixXd up = stacked.topRows(n);
  Eigen::MatrixXd low = stacked.bottomRows(n);
  Eigen::MatrixXd b = low.transpose() * up;
  return (b - b.transpose()).norm() <= tol.band(std::max(1.0, stacked.squaredNorm()));
}

LagrangianFrame LagrangianFrame::from_parts(const Eigen::MatrixXd& f_up, const Eigen::MatrixXd& f_low,
                                            const TolerancePolicy& tol) {
  if (f_up.rows() != f_up.cols() || f_low.rows() != f_low.cols() || f_up.rows() != f_low.rows())
    throw ValidationError("LagrangianFrame: components must be n x n");
  Eigen::MatrixXd stacked(2 * f_up.rows(), f_up.cols());
  stacked << f_up, f_low;
  if (!is_lagrangian(stacked, tol))
    throw ValidationError("LagrangianFrame: columns are rank-deficient or not isotropic");
  return LagrangianFrame(f_up, f_low);
}

LagrangianFrame LagrangianFrame::from_stacked(const Eigen::MatrixXd& stacked, const TolerancePolicy& tol) {
  if (stacked.rows() % 2 != 0 || stacked.cols() * 2 != stacked.rows())
    throw ValidationError("LagrangianFrame: stacked frame must be 2n x n");
  int n = static_cast<int>(stacked.cols());
  return from_parts(stacked.topRows(n), stacked.bottomRows(n), tol);
}

Eigen::MatrixXd LagrangianFrame::stacked() const {
  Eigen::MatrixXd s(2 * n(), n());
  s << up_, low_;
  return s;
}

LagrangianFrame LagrangianFrame::with_basis(const Eigen::MatrixXd& g) const {
  if (g.rows() != n() || g.cols() != n())
    throw ValidationError("with_basis: basis change must be n x n");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(g);
  if (!lu.isInvertible())
    throw ValidationError("with_basis: basis change must be invertible");
  return LagrangianFrame(up_ * g, low_ * g);
}

LagrangianFrame frame_from_z(const SymmetricMatrix& z) {
  return LagrangianFrame::from_parts(z.mat(), Eigen::MatrixXd::Identity(z.n(), z.n()));
}

LagrangianFrame act(const SymplecticElement& g, const LagrangianFrame& frame) {
  if (g.half_dim() != frame.n())
    throw ValidationError("act: dimension mismatch");
  int n = frame.n();
  Eigen::MatrixXd moved = g.mat() * frame.stacked();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(moved);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(2 * n, n);
  return LagrangianFrame::from_parts(q.topRows(n), q.bottomRows(n));
}

int bruhat_index(const LagrangianFrame& frame, const TolerancePolicy& tol) {
  return frame.n() - rank_of(frame.lower(), tol);
}

LambdaOrbitLabel orbit_invariant(const LagrangianFrame& frame, const TolerancePolicy& tol) {
  int k = bruhat_index(frame, tol);
  SymmetricMatrix b(frame.lower().transpose() * frame.upper());
  Signature sig = signature(b, tol);
  return {k, sig.neg, sig.pos};
}

LagrangianFrame representative_frame(int n, int k, int r, int s) {
  if (n < 1 || k < 0 || k > n)
    throw ValidationError("representative_frame: need 0 <= k <= n");
  int m = n - k;
  Eigen::MatrixXd zeta = zeta_of(m, r, s);
  Eigen::MatrixXd up = Eigen::MatrixXd::Zero(n, n);
  up.topLeftCorner(m, m) = -zeta;
  up.bottomRightCorner(k, k) = Eigen::MatrixXd::Identity(k, k);
  Eigen::MatrixXd low = Eigen::MatrixXd::Zero(n, n);
  low.topLeftCorner(m, m) = Eigen::MatrixXd::Identity(m, m);
  return LagrangianFrame::from_parts(up, low);
}

std::vector<LambdaOrbitLabel> enumerate_orbit_labels(int n) {
  if (n < 1) throw ValidationError("enumerate_orbit_labels: n must be >= 1");
  std::vector<LambdaOrbitLabel> labels;
  for (int k = 0; k <= n; ++k)
    for (int m = 0; m <= n - k; ++m)
      for (int r = m; r >= 0; --r) labels.push_back({k, r, m - r});
  return labels;
}

CellPoint CellPoint::make(int n, int k, const SymmetricMatrix& zeta, const Eigen::MatrixXd& xi) {
  if (k < 0 || k > n || n < 1)
    throw ValidationError("CellPoint: need 0 <= k <= n");
  if (zeta.n() != n - k || xi.rows() != n - k || xi.cols() != k)
    throw ValidationError("CellPoint: zeta must be (n-k) x (n-k) and xi (n-k) x k");
  return {n, k, zeta.mat(), xi};
}

SymmetricMatrix CellPoint::eta() const {
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
  int m = n - k;
  e.topLeftCorner(m, m) = zeta;
  e.topRightCorner(m, k) = xi;
  e.bottomLeftCorner(k, m) = xi.transpose();
  return SymmetricMatrix(e);
}

LeviBlocks LeviBlocks::split(const Eigen::MatrixXd& h, int k) {
  if (h.rows() != h.cols())
    throw ValidationError("LeviBlocks: matrix must be square");
  int n = static_cast<int>(h.rows());
  if (k < 0 || k > n)
    throw ValidationError("LeviBlocks: k out of range");
  int m = n - k;
  return {h.topLeftCorner(m, m), h.topRightCorner(m, k), h.bottomLeftCorner(k, m),
          h.bottomRightCorner(k, k)};
}

Eigen::MatrixXd LeviBlocks::join() const {
  int m = static_cast<int>(h1.rows());
  int k = static_cast<int>(h4.rows());
  Eigen::MatrixXd h(m + k, m + k);
  h.topLeftCorner(m, m) = h1;
  h.topRightCorner(m, k) = h2;
  h.bottomLeftCorner(k, m) = h3;
  h.bottomRightCorner(k, k) = h4;
  return h;
}

CellPoint l_action_on_cell(const LeviBlocks& h, const CellPoint& pt, const TolerancePolicy& tol) {
  int m = pt.n - pt.k;
  if (h.h1.rows() != m || h.h4.rows() != pt.k)
    throw ValidationError("l_action_on_cell: block sizes do not match the cell point");
  Eigen::MatrixXd den = h.h4 - h.h3 * pt.xi;
  if (determinant_in_zero_band(den, tol))
    throw SingularDenominator("l_action_on_cell: det(h4 - h3 xi) inside the zero band; the point leaves the chart");
  Eigen::MatrixXd b = den.transpose()
                          .partialPivLu()
                          .solve((-h.h2 + h.h1 * pt.xi).transpose())
                          .transpose();
  Eigen::MatrixXd c = h.h1 + b * h.h3;
  Eigen::MatrixXd a = c * pt.zeta * c.transpose();
  if ((a - a.transpose()).norm() > tol.band(std::max(1.0, a.norm()) * std::max(1.0, c.squaredNorm())))
    throw NumericalError("l_action_on_cell: zeta image failed the symmetry check");
  return CellPoint::make(pt.n, pt.k, SymmetricMatrix(a), b);
}

Eigen::MatrixXd cell_action_matrix(const Eigen::MatrixXd& h, int n, int k) {
  LeviBlocks hb = LeviBlocks::split(h, k);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(h);
  if (!lu.isInvertible())
    throw ValidationError("cell_action_matrix: h must be invertible");
  LeviBlocks hp = LeviBlocks::split(lu.inverse().transpose(), k);
  int m = n - k;
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  w.block(0, 0, m, m) = hp.h1;
  w.block(0, n + m, m, k) = hp.h2;
  w.block(m, m, k, k) = hb.h4;
  w.block(m, n, k, m) = -hb.h3;
  w.block(n, m, m, k) = -hb.h2;
  w.block(n, n, m, m) = hb.h1;
  w.block(n + m, 0, k, m) = hp.h3;
  w.block(n + m, n + m, k, k) = hp.h4;
  return w;
}

bool stabilizer_membership(const Eigen::MatrixXd& h, const LambdaOrbitLabel& label,
                           const TolerancePolicy& tol) {
  if (h.rows() != h.cols() || h.rows() == 0)
    throw ValidationError("stabilizer_membership: h must be square and non-empty");
  int n = static_cast<int>(h.rows());
  int m = n - label.k;
  if (m < 0 || label.r + label.s > m)
    throw ValidationError("stabilizer_membership: label does not fit the matrix size");
  LeviBlocks hb = LeviBlocks::split(h, label.k);
  double band = tol.band(std::max(1.0, h.squaredNorm()));
  if (hb.h2.size() > 0 && hb.h2.norm() > band) return false;
  Eigen::MatrixXd zeta = zeta_of(m, label.r, label.s);
  return (hb.h1 * zeta * hb.h1.transpose() - zeta).norm() <= band;
}

}  // namespace spflag
