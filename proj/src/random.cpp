#include "spflag/random.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "spflag/errors.hpp"

namespace spflag {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::size_t kBlockSize = 8192;

struct BlockSums {
  double sum_re = 0.0;
  double sum_im = 0.0;
  double sum_sqmod = 0.0;
  std::size_t count = 0;
};

/// Runs `total` item evaluations split into fixed blocks; block b uses
/// Rng(mix_seed(seed, stream_tag, b)). Blocks are assigned to workers by an
/// atomic counter but reduced in index order, so the result is a function of
/// (total, seed, stream_tag) only.
std::vector<BlockSums> run_blocks(std::size_t total, int workers, std::uint64_t seed,
                                  std::uint64_t stream_tag,
                                  const std::function<std::complex<double>(std::size_t, Rng&)>& item) {
  std::size_t n_blocks = (total + kBlockSize - 1) / kBlockSize;
  std::vector<BlockSums> partials(n_blocks);
  auto do_block = [&](std::size_t b) {
    Rng rng(mix_seed(seed, stream_tag, b));
    BlockSums bs;
    std::size_t lo = b * kBlockSize;
    std::size_t hi = std::min(total, lo + kBlockSize);
    for (std::size_t j = lo; j < hi; ++j) {
      std::complex<double> v = item(j, rng);
      bs.sum_re += v.real();
      bs.sum_im += v.imag();
      bs.sum_sqmod += std::norm(v);
      ++bs.count;
    }
    partials[b] = bs;
  };
  int nw = std::max(1, workers);
  if (nw == 1 || n_blocks <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) do_block(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nw));
    for (int w = 0; w < nw; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t b = next.fetch_add(1);
          if (b >= n_blocks) break;
          do_block(b);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  return partials;
}

McEstimateC reduce_blocks(const std::vector<BlockSums>& partials) {
  double sre = 0, sim = 0, ssq = 0;
  std::size_t n = 0;
  for (const auto& b : partials) {
    sre += b.sum_re;
    sim += b.sum_im;
    ssq += b.sum_sqmod;
    n += b.count;
  }
  McEstimateC est;
  est.samples = n;
  if (n == 0) return est;
  est.value = {sre / static_cast<double>(n), sim / static_cast<double>(n)};
  double var = ssq / static_cast<double>(n) - std::norm(est.value);
  est.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
  return est;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t st = root ^ (0x632be59bd9b4e019ULL + stream * 0x9e3779b97f4a7c15ULL);
  splitmix64(st);
  return splitmix64(st);
}

std::uint64_t mix_seed(std::uint64_t root, std::uint64_t stream, std::uint64_t sub) {
  return mix_seed(mix_seed(root, stream), sub);
}

double Rng::uniform() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 1.0 - uniform();  // (0, 1]
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

double Rng::cauchy() {
  return std::tan(std::numbers::pi * (uniform() - 0.5));
}

Eigen::MatrixXd Rng::gaussian_matrix(int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = normal();
  return m;
}

McEstimate mc_mean(const QuadratureSpec& spec, const std::function<double(Rng&)>& draw) {
  auto partials = run_blocks(spec.budget, spec.workers, spec.seed, 0x4D43u,
                             [&](std::size_t, Rng& rng) { return std::complex<double>(draw(rng), 0.0); });
  McEstimateC c = reduce_blocks(partials);
  return {c.value.real(), c.std_error, c.samples};
}

McEstimateC mc_mean_complex(const QuadratureSpec& spec,
                            const std::function<std::complex<double>(Rng&)>& draw) {
  auto partials = run_blocks(spec.budget, spec.workers, spec.seed, 0x4D43u,
                             [&](std::size_t, Rng& rng) { return draw(rng); });
  return reduce_blocks(partials);
}

SymSample sample_sym_polar(int n, double u_radial, Rng& direction_rng) {
  if (n < 1) throw ValidationError("sample_sym_polar: n must be >= 1");
  const int N = n * (n + 1) / 2;
  double u = std::min(std::max(u_radial, 0x1.0p-60), 1.0 - 0x1.0p-53);
  double t = std::tan(0.5 * std::numbers::pi * u);
  double r = t * t;

  Eigen::VectorXd w = direction_rng.gaussian_matrix(N, 1);
  double nw = w.norm();
  while (nw == 0.0) {
    w = direction_rng.gaussian_matrix(N, 1);
    nw = w.norm();
  }
  w /= nw;

  // Entry-metric embedding: diagonal entries carry w_i, each off-diagonal
  // pair carries w_k / sqrt(2), so trace(z^2) = r^2.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd z(n, n);
  int idx = 0;
  for (int i = 0; i < n; ++i) z(i, i) = r * w(idx++);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = r * w(idx++) * inv_sqrt2;
      z(i, j) = v;
      z(j, i) = v;
    }

  // weight = 1/density in Lebesgue dz coordinates:
  //   dz = 2^{-(N-n)/2} dw,  dw = r^{N-1} dr dS,  area(S^{N-1}) = 2 pi^{N/2}/Gamma(N/2),
  //   radial density p(r) = (1/pi) r^{-1/2} (1+r)^{-1}.
  double log_area = std::numbers::ln2 + 0.5 * N * std::log(std::numbers::pi) - std::lgamma(0.5 * N);
  double log_w = -0.5 * (N - n) * std::numbers::ln2 + log_area +
                 (N - 1) * std::log(r) + std::log(std::numbers::pi) + 0.5 * std::log(r) +
                 std::log1p(r);
  return {std::move(z), std::exp(log_w)};
}

namespace {

McEstimateC integrate_sym_impl(int n, std::size_t total, std::uint64_t seed, int workers,
                               std::uint64_t round_tag, bool deterministic_grid,
                               const std::function<std::complex<double>(const Eigen::MatrixXd&, Rng&)>& g) {
  if (total == 0) return {};
  // Divergence probing compares truncation growth across nested midpoint
  // grids, so probe rounds must share the unshifted grid; the plain
  // estimator randomizes the stratification offset.
  double shift = 0.0;
  if (!deterministic_grid) {
    Rng shift_rng(mix_seed(seed, 0x5317F7u, round_tag));
    shift = shift_rng.uniform();
  }
  auto partials = run_blocks(total, workers, seed, mix_seed(0xB10C5u, round_tag),
                             [&](std::size_t j, Rng& rng) {
                               double u = (static_cast<double>(j) + 0.5) / static_cast<double>(total) + shift;
                               u -= std::floor(u);
                               SymSample s = sample_sym_polar(n, u, rng);
                               // antithetic directions: the pair (z, -z) is
                               // equidistributed, halves the waste of
                               // signature filters and makes the radial edge
                               // contributions direction-independent
                               std::complex<double> v = 0.5 * (g(s.z, rng) + g(-s.z, rng));
                               return v * s.weight;
                             });
  return reduce_blocks(partials);
}

}  // namespace

McEstimate integrate_sym(int n, const QuadratureSpec& spec,
                         const std::function<double(const Eigen::MatrixXd&, Rng&)>& g) {
  McEstimateC c = integrate_sym_impl(n, spec.budget, spec.seed, spec.workers, 0, false,
                                     [&](const Eigen::MatrixXd& z, Rng& rng) {
                                       return std::complex<double>(g(z, rng), 0.0);
                                     });
  return {c.value.real(), c.std_error, c.samples};
}

McEstimateC integrate_sym_complex(int n, const QuadratureSpec& spec,
                                  const std::function<std::complex<double>(const Eigen::MatrixXd&, Rng&)>& g) {
  return integrate_sym_impl(n, spec.budget, spec.seed, spec.workers, 0, false, g);
}

IntegralProbe integrate_sym_probed(int n, const QuadratureSpec& spec,
                                   const std::function<double(const Eigen::MatrixXd&, Rng&)>& g,
                                   double growth_factor) {
  int rounds = std::max(1, spec.doubling_rounds);
  // batches of size B, 2B, ..., B*2^rounds summing to spec.budget
  std::size_t denom = (std::size_t{1} << (rounds + 1)) - 1;
  std::size_t base = std::max<std::size_t>(1, spec.budget / denom);

  IntegralProbe probe;
  bool all_grow = true;
  McEstimate last;
  for (int i = 0; i <= rounds; ++i) {
    std::size_t batch = base << i;
    McEstimateC c = integrate_sym_impl(n, batch, spec.seed, spec.workers, static_cast<std::uint64_t>(i + 1),
                                       true, [&](const Eigen::MatrixXd& z, Rng& rng) {
                                         return std::complex<double>(g(z, rng), 0.0);
                                       });
    double v = c.value.real();
    probe.round_values.push_back(v);
    if (!std::isfinite(v)) {
      probe.divergence_suspected = true;
      probe.estimate = {v, c.std_error, c.samples};
      return probe;
    }
    if (i > 0) {
      double prev = probe.round_values[static_cast<std::size_t>(i) - 1];
      bool grew = std::abs(v) > growth_factor * std::abs(prev) && std::abs(v) > 0;
      if (!grew) all_grow = false;
    }
    last = {v, c.std_error, c.samples};
  }
  probe.divergence_suspected = all_grow;
  probe.estimate = last;
  return probe;
}

}  // namespace spflag
