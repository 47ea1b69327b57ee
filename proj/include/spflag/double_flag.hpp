#ifndef SPFLAG_DOUBLE_FLAG_HPP
#define SPFLAG_DOUBLE_FLAG_HPP

#include <vector>

#include "spflag/numerics.hpp"
#include "spflag/random.hpp"

namespace spflag {

/// A point (z, y) with z symmetric n x n and y an n x d matrix of rank d.
struct PairPoint {
  SymmetricMatrix z;
  Eigen::MatrixXd y;

  static PairPoint make(const SymmetricMatrix& z, const Eigen::MatrixXd& y,
                        const TolerancePolicy& tol = {});
  int n() const { return z.n(); }
  int d() const { return static_cast<int>(y.cols()); }
};

/// Orbit label of a pair: (p, q) the signature of z, (s, t) the signature of
/// the restriction ty z^{-1} y, kdef its nullity. Constraints (valid for any
/// pair with invertible z): p + q = n, s + t + kdef = d, t + p >= d,
/// s + q >= d.
struct DoubleOrbitLabel {
  int p = 0;
  int q = 0;
  int s = 0;
  int t = 0;
  int kdef = 0;

  int n() const { return p + q; }
  int d() const { return s + t + kdef; }
  bool operator==(const DoubleOrbitLabel&) const = default;
};

/// Classifies the pair. Throws SingularZ when z has an eigenvalue in the
/// zero band (the point is outside the open stratum this classifier covers)
/// and RankDeficientY when rank y < d. The restricted form is computed by a
/// linear solve, never by an explicit inverse.
DoubleOrbitLabel classify_pair(const PairPoint& pt, const TolerancePolicy& tol = {});

/// Open orbit iff the restricted form is non-degenerate: s + t = d.
bool is_open(const DoubleOrbitLabel& label);

/// All open-orbit labels: p + q = n, s + t = d, 0 <= s <= p, 0 <= t <= q.
std::vector<DoubleOrbitLabel> enumerate_open_orbits(int n, int d);

/// Canonical pair for an open label: z = diag(1_p, -1_q), y selecting s
/// coordinates among the first p axes and t among the last q (lowest indices
/// first).
PairPoint representative_pair(const DoubleOrbitLabel& label);

/// Applies `trials` random (h, m) in GL_n x GL_d via (z, y) -> (h z th, h y tm)
/// to the canonical pair of the label and checks that classify_pair is
/// constant. Returns false on the first counterexample.
bool orbit_invariance_check(const DoubleOrbitLabel& label, int trials, Rng& rng,
                            const TolerancePolicy& tol = {});

/// Random invertible matrix with condition number below `max_cond`
/// (Gaussian entries, redrawn as needed).
Eigen::MatrixXd random_well_conditioned(int n, Rng& rng, double max_cond = 1e3);

}  // namespace spflag

#endif
