#include "spflag/symplectic.hpp"

#include <cmath>
#include <sstream>

namespace spflag {

namespace {

int checked_half_dim(const Eigen::MatrixXd& g) {
  if (g.rows() != g.cols())
    throw ValidationError("symplectic: matrix is not square");
  if (g.rows() % 2 != 0 || g.rows() == 0)
    throw ValidationError("symplectic: dimension must be a positive even number");
  return static_cast<int>(g.rows()) / 2;
}

Eigen::MatrixXd inverse_or_throw(const Eigen::MatrixXd& m, const char* what) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  if (!lu.isInvertible())
    throw ValidationError(std::string(what) + ": block is not invertible");
  return lu.inverse();
}

}  // namespace

Eigen::MatrixXd symplectic_form(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  j.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  return j;
}

bool is_symplectic(const Eigen::MatrixXd& g, const TolerancePolicy& tol) {
  int n = checked_half_dim(g);
  double scale = std::max(1.0, g.squaredNorm());
  double band = tol.band(scale);

  Eigen::MatrixXd j = symplectic_form(n);
  bool gram_ok = (g.transpose() * j * g - j).norm() <= band;

  Eigen::MatrixXd a = g.topLeftCorner(n, n), b = g.topRightCorner(n, n);
  Eigen::MatrixXd c = g.bottomLeftCorner(n, n), d = g.bottomRightCorner(n, n);
  Eigen::MatrixXd atc = a.transpose() * c;
  Eigen::MatrixXd btd = b.transpose() * d;
  double block_resid = std::sqrt((atc - atc.transpose()).squaredNorm() +
                                 (btd - btd.transpose()).squaredNorm() +
                                 (a.transpose() * d - c.transpose() * b -
                                  Eigen::MatrixXd::Identity(n, n)).squaredNorm());
  bool block_ok = block_resid <= band;

  if (gram_ok != block_ok) {
    std::ostringstream os;
    os << "is_symplectic: Gram and block criteria disagree at the tolerance boundary"
       << " (gram=" << gram_ok << ", block=" << block_ok << ", band=" << band << ")";
    throw NumericalError(os.str());
  }
  return gram_ok;
}

SymplecticElement SymplecticElement::from_matrix(const Eigen::MatrixXd& g, const TolerancePolicy& tol) {
  int n = checked_half_dim(g);
  if (!is_symplectic(g, tol))
    throw ValidationError("SymplecticElement: matrix does not satisfy tg J g = J");
  return SymplecticElement(g, n);
}

SymplecticElement SymplecticElement::unchecked(Eigen::MatrixXd g) {
  int n = checked_half_dim(g);
  return SymplecticElement(std::move(g), n);
}

SymplecticElement SymplecticElement::identity(int n) {
  return unchecked(Eigen::MatrixXd::Identity(2 * n, 2 * n));
}

SymplecticElement SymplecticElement::levi(const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols() || h.rows() == 0)
    throw ValidationError("levi: block must be square and non-empty");
  int n = static_cast<int>(h.rows());
  Eigen::MatrixXd hinv_t = inverse_or_throw(h, "levi").transpose();
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  g.topLeftCorner(n, n) = h;
  g.bottomRightCorner(n, n) = hinv_t;
  return unchecked(std::move(g));
}

SymplecticElement SymplecticElement::upper_unipotent(const SymmetricMatrix& z) {
  int n = z.n();
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  g.topRightCorner(n, n) = z.mat();
  return unchecked(std::move(g));
}

SymplecticElement SymplecticElement::lower_unipotent(const SymmetricMatrix& z) {
  int n = z.n();
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  g.bottomLeftCorner(n, n) = z.mat();
  return unchecked(std::move(g));
}

SymplecticElement SymplecticElement::operator*(const SymplecticElement& rhs) const {
  if (n_ != rhs.n_) throw ValidationError("SymplecticElement: dimension mismatch in product");
  return unchecked(g_ * rhs.g_);
}

SymplecticElement sp_inverse(const SymplecticElement& g) {
  int n = g.half_dim();
  Eigen::MatrixXd inv(2 * n, 2 * n);
  inv.topLeftCorner(n, n) = g.d().transpose();
  inv.topRightCorner(n, n) = -g.b().transpose();
  inv.bottomLeftCorner(n, n) = -g.c().transpose();
  inv.bottomRightCorner(n, n) = g.a().transpose();
  return SymplecticElement::unchecked(std::move(inv));
}

SiegelParabolicElement SiegelParabolicElement::from_parts(const Eigen::MatrixXd& x,
                                                          const Eigen::MatrixXd& z_blk,
                                                          const TolerancePolicy& tol) {
  if (x.rows() != x.cols() || x.rows() == 0)
    throw ValidationError("SiegelParabolicElement: x must be square and non-empty");
  if (z_blk.rows() != x.rows() || z_blk.cols() != x.cols())
    throw ValidationError("SiegelParabolicElement: z block has wrong shape");
  Eigen::MatrixXd xinv = inverse_or_throw(x, "SiegelParabolicElement");
  if (!is_symmetric_within(xinv * z_blk, tol))
    throw ValidationError("SiegelParabolicElement: x^{-1} z is not symmetric");
  return SiegelParabolicElement(x, z_blk);
}

SiegelParabolicElement SiegelParabolicElement::levi(const Eigen::MatrixXd& x) {
  return from_parts(x, Eigen::MatrixXd::Zero(x.rows(), x.cols()));
}

SiegelParabolicElement SiegelParabolicElement::identity(int n) {
  return levi(Eigen::MatrixXd::Identity(n, n));
}

Eigen::MatrixXd SiegelParabolicElement::mat() const {
  int m = n();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  p.topLeftCorner(m, m) = x_;
  p.topRightCorner(m, m) = z_;
  p.bottomRightCorner(m, m) = inverse_or_throw(x_, "SiegelParabolicElement").transpose();
  return p;
}

SymplecticElement SiegelParabolicElement::to_symplectic() const {
  return SymplecticElement::unchecked(mat());
}

SiegelParabolicElement SiegelParabolicElement::operator*(const SiegelParabolicElement& rhs) const {
  if (n() != rhs.n()) throw ValidationError("SiegelParabolicElement: dimension mismatch");
  Eigen::MatrixXd y = inverse_or_throw(rhs.x_, "SiegelParabolicElement").transpose();
  return SiegelParabolicElement(x_ * rhs.x_, x_ * rhs.z_ + z_ * y);
}

SymplecticElement conjugate_parabolic(const SymplecticElement& g, const SiegelParabolicElement& p) {
  if (g.half_dim() != p.n())
    throw ValidationError("conjugate_parabolic: dimension mismatch");
  int n = g.half_dim();
  Eigen::MatrixXd a = g.a(), b = g.b(), c = g.c(), d = g.d();
  const Eigen::MatrixXd& x = p.x();
  const Eigen::MatrixXd& z = p.z_blk();
  Eigen::MatrixXd y = inverse_or_throw(x, "conjugate_parabolic").transpose();

  Eigen::MatrixXd out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = d.transpose() * x * a + d.transpose() * z * c - b.transpose() * y * c;
  out.topRightCorner(n, n) = d.transpose() * x * b + d.transpose() * z * d - b.transpose() * y * d;
  out.bottomLeftCorner(n, n) = -c.transpose() * x * a - c.transpose() * z * c + a.transpose() * y * c;
  out.bottomRightCorner(n, n) = -c.transpose() * x * b - c.transpose() * z * d + a.transpose() * y * d;
  return SymplecticElement::unchecked(std::move(out));
}

bool is_in_K(const SymplecticElement& g, const TolerancePolicy& tol) {
  int n = g.half_dim();
  double band = tol.band(std::max(1.0, g.mat().squaredNorm()));
  Eigen::MatrixXd a = g.a(), b = g.b(), c = g.c(), d = g.d();
  Eigen::MatrixXd atb = a.transpose() * b;
  double block_resid = std::sqrt((d - a).squaredNorm() + (b + c).squaredNorm() +
                                 (atb - atb.transpose()).squaredNorm() +
                                 (a.transpose() * a + b.transpose() * b -
                                  Eigen::MatrixXd::Identity(n, n)).squaredNorm());
  bool block_ok = block_resid <= band;

  bool orth_ok = (g.mat().transpose() * g.mat() -
                  Eigen::MatrixXd::Identity(2 * n, 2 * n)).norm() <= band &&
                 is_symplectic(g.mat(), tol);
  if (block_ok != orth_ok)
    throw NumericalError("is_in_K: block and orthogonality criteria disagree at the tolerance boundary");
  return block_ok;
}

WeylRep weyl_rep(int n, int k) {
  if (n < 1) throw ValidationError("weyl_rep: n must be >= 1");
  if (k < 0 || k > n) throw ValidationError("weyl_rep: k out of range [0, n]");
  int m = n - k;
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  w.block(0, n, m, m) = -Eigen::MatrixXd::Identity(m, m);
  w.block(m, m, k, k) = Eigen::MatrixXd::Identity(k, k);
  w.block(n, 0, m, m) = Eigen::MatrixXd::Identity(m, m);
  w.block(n + m, n + m, k, k) = Eigen::MatrixXd::Identity(k, k);
  return {n, k, std::move(w)};
}

SymmetricMatrix fractional_action(const SymplecticElement& g, const SymmetricMatrix& z,
                                  const TolerancePolicy& tol) {
  if (g.half_dim() != z.n())
    throw ValidationError("fractional_action: dimension mismatch");
  Eigen::MatrixXd den = g.c() * z.mat() - g.d();
  if (determinant_in_zero_band(den, tol)) {
    std::ostringstream os;
    os << "fractional_action: det(c z - d) = " << den.determinant()
       << " is inside the zero band; z is outside this element's chart";
    throw SingularDenominator(os.str());
  }
  Eigen::MatrixXd num = -(g.a() * z.mat() - g.b());
  Eigen::MatrixXd result = den.transpose().partialPivLu().solve(num.transpose()).transpose();

  // Asymmetry grows with the denominator's conditioning; scale the check by
  // the Hadamard-bound condition estimate.
  double hadamard = 1.0;
  for (Eigen::Index i = 0; i < den.rows(); ++i) hadamard *= den.row(i).norm();
  double cond_est = std::max(1.0, hadamard / std::max(std::abs(den.determinant()), 1e-300));
  double sym_band = tol.band(std::max(1.0, result.norm()) * cond_est);
  if ((result - result.transpose()).norm() > sym_band)
    throw NumericalError("fractional_action: result failed the symmetry check");
  return SymmetricMatrix(result);
}

IwasawaVz iwasawa_vz(const SymmetricMatrix& z) {
  int n = z.n();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(z.mat());
  if (es.info() != Eigen::Success)
    throw NumericalError("iwasawa_vz: eigendecomposition failed");
  Eigen::VectorXd lam = es.eigenvalues();
  const Eigen::MatrixXd& q = es.eigenvectors();
  Eigen::VectorXd h_ev = (lam.array().square() + 1.0).sqrt();
  Eigen::MatrixXd h = q * h_ev.asDiagonal() * q.transpose();
  Eigen::MatrixXd hinv = q * h_ev.cwiseInverse().asDiagonal() * q.transpose();

  Eigen::MatrixXd kmat(2 * n, 2 * n);
  kmat.topLeftCorner(n, n) = hinv;
  kmat.topRightCorner(n, n) = -hinv * z.mat();
  kmat.bottomLeftCorner(n, n) = hinv * z.mat();
  kmat.bottomRightCorner(n, n) = hinv;

  Eigen::MatrixXd mamat = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  mamat.topLeftCorner(n, n) = h;
  mamat.bottomRightCorner(n, n) = hinv;  // h is symmetric positive definite

  Eigen::MatrixXd nmat = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  // kept as the raw product so callers can observe the floating-point
  // symmetry residual of the closed-form factor
  nmat.topRightCorner(n, n) = hinv * z.mat() * hinv;

  double log_det = (lam.array().square() + 1.0).log().sum();
  double alpha = std::exp(log_det / (2.0 * n));

  return {SymplecticElement::unchecked(std::move(kmat)),
          SymplecticElement::unchecked(std::move(mamat)),
          SymplecticElement::unchecked(std::move(nmat)), alpha};
}

}  // namespace spflag
