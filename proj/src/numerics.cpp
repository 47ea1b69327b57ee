#include "spflag/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spflag {

double TolerancePolicy::band(double scale) const {
  if (rel_eps <= 0 || abs_floor <= 0)
    throw ValidationError("TolerancePolicy: rel_eps and abs_floor must be positive");
  return std::max(abs_floor, rel_eps * scale);
}

SymmetricMatrix::SymmetricMatrix(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw ValidationError("SymmetricMatrix: input is not square");
  if (!m.allFinite())
    throw ValidationError("SymmetricMatrix: input has non-finite entries");
  m_ = 0.5 * (m + m.transpose());
}

SymmetricMatrix SymmetricMatrix::indefinite_identity(int n, int p, int q) {
  if (p < 0 || q < 0 || p + q > n)
    throw ValidationError("indefinite_identity: need p,q >= 0 and p+q <= n");
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
  d.head(p).setOnes();
  d.segment(p, q).setConstant(-1.0);
  return SymmetricMatrix(d.asDiagonal());
}

Eigen::VectorXd sym_eigenvalues(const SymmetricMatrix& s) {
  if (s.n() == 0) return Eigen::VectorXd(0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.mat(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    std::ostringstream os;
    os << "symmetric eigendecomposition failed: n=" << s.n()
       << " frobenius=" << s.mat().norm()
       << " max|entry|=" << s.mat().cwiseAbs().maxCoeff();
    throw NumericalError(os.str());
  }
  return es.eigenvalues();
}

double spectral_norm(const SymmetricMatrix& s) {
  if (s.n() == 0) return 0.0;
  Eigen::VectorXd ev = sym_eigenvalues(s);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

Signature signature(const SymmetricMatrix& s, const TolerancePolicy& tol) {
  Eigen::VectorXd ev = sym_eigenvalues(s);
  double band = tol.band(ev.size() ? std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))) : 0.0);
  Signature sig;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= band)
      ++sig.zero;
    else if (ev(i) > 0)
      ++sig.pos;
    else
      ++sig.neg;
  }
  return sig;
}

int rank_of(const Eigen::MatrixXd& m, const TolerancePolicy& tol) {
  if (m.size() == 0) return 0;
  if (!m.allFinite()) throw ValidationError("rank_of: input has non-finite entries");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double band = tol.band(sv(0));
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > band) ++r;
  return r;
}

Eigen::MatrixXd sqrt_spd(const SymmetricMatrix& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.mat());
  if (es.info() != Eigen::Success)
    throw NumericalError("sqrt_spd: eigendecomposition failed");
  Eigen::VectorXd ev = es.eigenvalues();
  if (ev.size() && ev(0) <= 0)
    throw NumericalError("sqrt_spd: matrix is not positive definite");
  return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

bool is_symmetric_within(const Eigen::MatrixXd& m, const TolerancePolicy& tol) {
  if (m.rows() != m.cols()) return false;
  double resid = (m - m.transpose()).norm();
  return resid <= tol.band(m.norm());
}

bool determinant_in_zero_band(const Eigen::MatrixXd& m, const TolerancePolicy& tol) {
  if (m.rows() != m.cols())
    throw ValidationError("determinant_in_zero_band: matrix is not square");
  if (m.rows() == 0) return false;  // empty product, det = 1
  double hadamard = 1.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    hadamard *= m.row(i).norm();
  return std::abs(m.determinant()) <= tol.band(hadamard);
}

}  // namespace spflag
