#include "spflag/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spflag {

namespace {

void check_pair_shapes(const SymmetricMatrix& z, const Eigen::MatrixXd& y) {
  if (y.rows() != z.n())
    throw ValidationError("invariants: y must have n rows");
  if (y.cols() < 1 || y.cols() > y.rows())
    throw ValidationError("invariants: need 1 <= d <= n");
}

Eigen::MatrixXd bordered(const SymmetricMatrix& z, const Eigen::MatrixXd& y) {
  int n = z.n();
  int d = static_cast<int>(y.cols());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + d, n + d);
  m.topLeftCorner(n, n) = z.mat();
  m.topRightCorner(n, d) = y;
  m.bottomLeftCorner(d, n) = y.transpose();
  return m;
}

void require_invertible_z(const SymmetricMatrix& z, const TolerancePolicy& tol) {
  if (signature(z, tol).zero > 0)
    throw SingularZ("kernel: z has an eigenvalue in the zero band");
}

/// base^e for base > 0; the real-exponent path stays exactly real.
std::complex<double> cpow_pos(double base, std::complex<double> e) {
  if (e.imag() == 0.0) return {std::pow(base, e.real()), 0.0};
  return std::exp(e * std::log(base));
}

double pairwise_sum(std::vector<double>& terms, std::size_t lo, std::size_t hi) {
  if (hi - lo == 0) return 0.0;
  if (hi - lo == 1) return terms[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

/// Lexicographic d-subset iteration over {0, ..., n-1}.
bool next_combination(std::vector<int>& idx, int n) {
  int d = static_cast<int>(idx.size());
  for (int i = d - 1; i >= 0; --i) {
    if (idx[i] < n - d + i) {
      ++idx[i];
      for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

double chi1(const Eigen::MatrixXd& h, const Eigen::MatrixXd& m) {
  (void)m;
  double dh = h.determinant();
  return dh * dh;
}

double chi2(const Eigen::MatrixXd& h, const Eigen::MatrixXd& m) {
  double dm = m.determinant();
  return chi1(h, m) * dm * dm;
}

double psi1(const SymmetricMatrix& z, const Eigen::MatrixXd& y) {
  check_pair_shapes(z, y);
  return z.mat().determinant();
}

double block_determinant(const SymmetricMatrix& z, const Eigen::MatrixXd& y) {
  check_pair_shapes(z, y);
  return bordered(z, y).determinant();
}

double psi2(const SymmetricMatrix& z, const Eigen::MatrixXd& y) {
  int d = static_cast<int>(y.cols());
  double sign = (d % 2 == 0) ? 1.0 : -1.0;
  return sign * block_determinant(z, y);
}

double psi2_product_route(const SymmetricMatrix& z, const Eigen::MatrixXd& y,
                          const TolerancePolicy& tol) {
  check_pair_shapes(z, y);
  require_invertible_z(z, tol);
  Eigen::MatrixXd w = z.mat().partialPivLu().solve(y);
  return z.mat().determinant() * (y.transpose() * w).determinant();
}

double kernel_K(const SymmetricMatrix& z, const Eigen::MatrixXd& y, double alpha, double beta,
                const TolerancePolicy& tol) {
  check_pair_shapes(z, y);
  require_invertible_z(z, tol);
  double detz = std::abs(z.mat().determinant());
  double blk = std::abs(block_determinant(z, y));
  double first = std::pow(detz, alpha - beta);
  double second = (beta == 0.0) ? 1.0 : std::pow(blk, beta);
  return first * second;
}

std::complex<double> kernel_K(const SymmetricMatrix& z, const Eigen::MatrixXd& y,
                              std::complex<double> alpha, std::complex<double> beta,
                              const TolerancePolicy& tol) {
  check_pair_shapes(z, y);
  require_invertible_z(z, tol);
  double detz = std::abs(z.mat().determinant());
  double blk = std::abs(block_determinant(z, y));
  std::complex<double> first = cpow_pos(detz, alpha - beta);
  std::complex<double> second;
  if (beta == std::complex<double>(0.0, 0.0))
    second = 1.0;
  else if (blk == 0.0)
    second = (beta.real() > 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
  else
    second = cpow_pos(blk, beta);
  return first * second;
}

double kernel_K_signed(const SymmetricMatrix& z, const Eigen::MatrixXd& y, long alpha, long beta,
                       const TolerancePolicy& tol) {
  check_pair_shapes(z, y);
  require_invertible_z(z, tol);
  double detz = z.mat().determinant();
  double blk = block_determinant(z, y);
  double first = std::pow(detz, static_cast<double>(alpha - beta));
  double second = (beta == 0) ? 1.0 : std::pow(blk, static_cast<double>(beta));
  return first * second;
}

double minor_expansion(const SymmetricMatrix& z, const Eigen::MatrixXd& y) {
  check_pair_shapes(z, y);
  int n = z.n();
  int d = static_cast<int>(y.cols());
  if (n > 12)
    throw ValidationError("minor_expansion: n > 12 would require binom(n,d)^2 terms");

  // Plucker coordinates of y, in lexicographic subset order.
  std::vector<std::vector<int>> subsets;
  std::vector<double> y_minor;
  {
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    do {
      Eigen::MatrixXd sub(d, d);
      for (int r = 0; r < d; ++r) sub.row(r) = y.row(idx[r]);
      subsets.push_back(idx);
      y_minor.push_back(sub.determinant());
    } while (next_combination(idx, n));
  }

  std::vector<double> terms;
  terms.reserve(subsets.size() * subsets.size());
  Eigen::MatrixXd zsub(d, d);
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = 0; b < subsets.size(); ++b) {
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) zsub(r, c) = z(subsets[a][r], subsets[b][c]);
      terms.push_back(zsub.determinant() * y_minor[a] * y_minor[b]);
    }
  return pairwise_sum(terms, 0, terms.size());
}

MultiIndex MultiIndex::of(std::vector<long> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0)
      throw ValidationError("MultiIndex: entries must be non-negative");
    if (i > 0 && parts[i] > parts[i - 1])
      throw ValidationError("MultiIndex: entries must be weakly decreasing");
  }
  return {std::move(parts)};
}

double rising_factorial(double x, long k) {
  if (k < 0) throw ValidationError("rising_factorial: k must be >= 0");
  double out = 1.0;
  for (long j = 0; j < k; ++j) out *= x + static_cast<double>(j);
  return out;
}

double pochhammer_general(double nu, const MultiIndex& a) {
  double out = 1.0;
  for (int i = 0; i < a.length(); ++i)
    out *= rising_factorial(nu - 0.5 * i, a.parts[static_cast<std::size_t>(i)]);
  return out;
}

bool pochhammer_vanishes(long nu, const MultiIndex& a) {
  if (nu > 0)
    throw ValidationError("pochhammer_vanishes: nu must be a non-positive integer");
  if (a.length() == 0) return false;
  return a.parts[0] > -nu;
}

}  // namespace spflag
