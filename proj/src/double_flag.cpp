#include "spflag/double_flag.hpp"

#include <sstream>

namespace spflag {

PairPoint PairPoint::make(const SymmetricMatrix& z, const Eigen::MatrixXd& y,
                          const TolerancePolicy& tol) {
  if (y.rows() != z.n())
    throw ValidationError("PairPoint: y must have n rows");
  if (y.cols() < 1 || y.cols() > y.rows())
    throw ValidationError("PairPoint: need 1 <= d <= n");
  (void)tol;
  return {z, y};
}

DoubleOrbitLabel classify_pair(const PairPoint& pt, const TolerancePolicy& tol) {
  int d = pt.d();
  if (rank_of(pt.y, tol) != d)
    throw RankDeficientY("classify_pair: rank y < d");
  Signature zsig = signature(pt.z, tol);
  if (zsig.zero > 0) {
    std::ostringstream os;
    os << "classify_pair: z has " << zsig.zero
       << " eigenvalue(s) in the zero band; the pair is outside the open stratum";
    throw SingularZ(os.str());
  }
  Eigen::MatrixXd w = pt.z.mat().partialPivLu().solve(pt.y);
  SymmetricMatrix restricted(pt.y.transpose() * w);
  Signature rsig = signature(restricted, tol);

  DoubleOrbitLabel label{zsig.pos, zsig.neg, rsig.pos, rsig.neg, rsig.zero};
  if (label.t + label.p < d || label.s + label.q < d || label.s + label.t > d) {
    std::ostringstream os;
    os << "classify_pair: tolerance artifact, label (" << label.p << "," << label.q << ";"
       << label.s << "," << label.t << "," << label.kdef << ") violates the signature constraints";
    throw NumericalError(os.str());
  }
  return label;
}

bool is_open(const DoubleOrbitLabel& label) { return label.kdef == 0; }

std::vector<DoubleOrbitLabel> enumerate_open_orbits(int n, int d) {
  if (n < 1 || d < 1 || d > n)
    throw ValidationError("enumerate_open_orbits: need 1 <= d <= n");
  std::vector<DoubleOrbitLabel> labels;
  for (int p = 0; p <= n; ++p) {
    int q = n - p;
    for (int s = 0; s <= std::min(p, d); ++s) {
      int t = d - s;
      if (t < 0 || t > q) continue;
      labels.push_back({p, q, s, t, 0});
    }
  }
  return labels;
}

PairPoint representative_pair(const DoubleOrbitLabel& label) {
  int n = label.n();
  int d = label.d();
  if (n < 1 || d < 1 || label.kdef != 0 || label.s > label.p || label.t > label.q ||
      label.p < 0 || label.q < 0 || label.s < 0 || label.t < 0)
    throw ValidationError("representative_pair: label does not describe an open orbit");
  SymmetricMatrix z = SymmetricMatrix::indefinite_identity(n, label.p, label.q);
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(n, d);
  for (int j = 0; j < label.s; ++j) y(j, j) = 1.0;
  for (int j = 0; j < label.t; ++j) y(label.p + j, label.s + j) = 1.0;
  return PairPoint::make(z, y);
}

Eigen::MatrixXd random_well_conditioned(int n, Rng& rng, double max_cond) {
  for (;;) {
    Eigen::MatrixXd h = rng.gaussian_matrix(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(h);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 0 && sv(0) / sv(sv.size() - 1) < max_cond) return h;
  }
}

bool orbit_invariance_check(const DoubleOrbitLabel& label, int trials, Rng& rng,
                            const TolerancePolicy& tol) {
  PairPoint rep = representative_pair(label);
  if (!(classify_pair(rep, tol) == label)) return false;
  for (int i = 0; i < trials; ++i) {
    Eigen::MatrixXd h = random_well_conditioned(rep.n(), rng);
    Eigen::MatrixXd m = random_well_conditioned(rep.d(), rng);
    PairPoint moved = PairPoint::make(SymmetricMatrix(h * rep.z.mat() * h.transpose()),
                                      h * rep.y * m.transpose());
    if (!(classify_pair(moved, tol) == label)) return false;
  }
  return true;
}

}  // namespace spflag
