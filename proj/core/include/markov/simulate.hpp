#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "markov/kernel.hpp"
#include "markov/mixing.hpp"

namespace markov {

/// Counter-based generator: each draw is the SplitMix64 finalizer applied to
/// a fresh counter value, so streams are stateless and parallel-safe. A
/// per-trial stream is derived by hashing (seed, trial_index).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t stream_key) : key_(stream_key) {}

  /// Stream key for trial `trial` under `seed`.
  static std::uint64_t stream(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next_u64();
  /// Uniform double in [0,1) with 53 random bits.
  double next_double();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct SimConfig {
  std::uint64_t seed = 1;
  unsigned trials = 1;
  unsigned n = 1;
  bool stationary_init = true;       // sample X_1 from pi
  std::vector<double> init_weights;  // used when stationary_init is false
};

/// Length-n trajectory as state indices; X_1 from init, transitions by
/// inverse CDF over row cumulative sums. Bit-reproducible given the stream.
std::vector<std::size_t> sample_path(const MarkovKernel& kernel,
                                     const std::vector<double>& init,
                                     unsigned n, CounterRng& rng);

/// d_TV between the path's empirical distribution and pi.
double empirical_tv(const std::vector<std::size_t>& path, const Distribution& pi);

struct BoundCurve {
  std::string name;
  std::function<double(double t)> bound;  // tail bound at threshold t
};

struct TailExperimentReport {
  std::vector<double> t_grid;
  std::vector<double> empirical_tail;
  std::vector<double> standard_error;               // binomial SE per t
  std::vector<std::vector<double>> bound_values;    // per curve, per t
  std::vector<std::string> bound_names;
  std::vector<std::pair<std::size_t, std::size_t>> violations;  // (curve, t index)
};

/// Estimates P(|S - E_pi S| >= t) for S = sum f(X_i) over `trials`
/// independent stationary paths and compares against each bound curve.
/// A violation is an empirical frequency above bound + 3 standard errors.
TailExperimentReport tail_experiment(const MarkovKernel& kernel,
                                     const Distribution& pi,
                                     const ObservedFunction& f,
                                     const SimConfig& config,
                                     const std::vector<double>& t_grid,
                                     const std::vector<BoundCurve>& bounds);

struct TvExperimentReport {
  double mean_tv = 0.0;
  double mean_bound = 0.0;  // empirical_tv_mean_bound at the same inputs
  bool mean_ok = false;
  std::vector<double> t_grid;
  std::vector<double> empirical_concentration;  // P(|d - mean d| >= t)
  std::vector<double> mcdiarmid_bound;          // 2 exp(-t^2 n / (8 t_mix))
  std::vector<std::size_t> violations;
};

/// Monte Carlo check of the empirical-TV mean bound and of the McDiarmid
/// concentration of d_TV(pi_em, pi) around its mean.
TvExperimentReport tv_experiment(const MarkovKernel& kernel,
                                 const Distribution& pi, const SimConfig& config,
                                 unsigned t_mix, double gap, bool reversible,
                                 const std::vector<double>& t_grid);

}  // namespace markov
