#ifndef SPFLAG_RANDOM_HPP
#define SPFLAG_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace spflag {

/// Mixes a root seed with stream identifiers (splitmix64 steps) so that
/// independent substreams can be derived deterministically.
std::uint64_t mix_seed(std::uint64_t root, std::uint64_t stream);
std::uint64_t mix_seed(std::uint64_t root, std::uint64_t stream, std::uint64_t sub);

/// Seeded generator with explicitly implemented distribution transforms.
/// Only the engine comes from <random> (mt19937_64 is fully specified by the
/// standard); the transforms are written out here so that results are
/// reproducible independent of the standard library vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }
  /// uniform on [0,1)
  double uniform();
  /// standard normal (Box-Muller; pairs cached)
  double normal();
  /// standard Cauchy
  double cauchy();

  Eigen::MatrixXd gaussian_matrix(int rows, int cols);

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Sample-count, seed, worker hint, and divergence-doubling rounds for the
/// Monte-Carlo estimators. Estimates are deterministic functions of
/// (budget, seed) alone; the worker count only affects wall time.
struct QuadratureSpec {
  std::size_t budget = 100000;
  std::uint64_t seed = 1;
  int workers = 1;
  int doubling_rounds = 4;
};

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

struct McEstimateC {
  std::complex<double> value{0.0, 0.0};
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Mean of draw(rng) over spec.budget samples. Samples are partitioned into
/// fixed blocks, block b drawing from Rng(mix_seed(seed, b)); blocks may be
/// processed by any number of workers but are reduced in index order, so the
/// result does not depend on spec.workers.
McEstimate mc_mean(const QuadratureSpec& spec, const std::function<double(Rng&)>& draw);
McEstimateC mc_mean_complex(const QuadratureSpec& spec,
                            const std::function<std::complex<double>(Rng&)>& draw);

/// One importance sample for an integral over Sym_n(R) with respect to
/// Lebesgue measure on the independent entries. The point is built in polar
/// form z = r*Theta with trace(Theta^2) = 1: the direction is uniform on the
/// entry-metric sphere and the radius has density (1/pi) r^{-1/2} (1+r)^{-1}
/// (Cauchy-like tails at both r -> 0 and r -> infinity). `weight` is
/// 1/density evaluated in Lebesgue dz coordinates, so
/// E[g(z) * weight] = integral of g over Sym_n.
struct SymSample {
  Eigen::MatrixXd z;
  double weight;
};
SymSample sample_sym_polar(int n, double u_radial, Rng& direction_rng);

/// Integral of g over Sym_n(R) by the polar importance sampler with the
/// radial quantile stratified across the whole budget (seeded shift). The
/// integrand receives the per-sample generator so additional variables
/// (e.g. a paired frame integral) can be drawn reproducibly.
McEstimate integrate_sym(int n, const QuadratureSpec& spec,
                         const std::function<double(const Eigen::MatrixXd&, Rng&)>& g);
McEstimateC integrate_sym_complex(int n, const QuadratureSpec& spec,
                                  const std::function<std::complex<double>(const Eigen::MatrixXd&, Rng&)>& g);

/// Budget-doubling divergence probe: doubling_rounds+1 independent batches of
/// sizes B, 2B, ..., B*2^rounds (B chosen so the total equals spec.budget);
/// divergence is suspected iff every consecutive batch estimate grows by more
/// than `growth_factor` (or the estimate is non-finite).
struct IntegralProbe {
  McEstimate estimate;               // last (largest) batch
  std::vector<double> round_values;  // batch estimates in order
  bool divergence_suspected = false;
};
IntegralProbe integrate_sym_probed(int n, const QuadratureSpec& spec,
                                   const std::function<double(const Eigen::MatrixXd&, Rng&)>& g,
                                   double growth_factor = 1.5);

}  // namespace spflag

#endif
