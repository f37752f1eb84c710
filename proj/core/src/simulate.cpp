#include "markov/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "markov/bounds.hpp"

namespace markov {

namespace {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t inverse_cdf(std::span<const double> weights, double u) {
  double cum = 0.0;
  for (std::size_t x = 0; x < weights.size(); ++x) {
    cum += weights[x];
    if (u < cum) return x;
  }
  return weights.size() - 1;  // guard against rounding at u ~ 1
}

}  // namespace

std::uint64_t CounterRng::stream(std::uint64_t seed, std::uint64_t trial) {
  return mix64(seed ^ mix64(trial));
}

std::uint64_t CounterRng::next_u64() { return mix64(key_ ^ mix64(counter_++)); }

double CounterRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::vector<std::size_t> sample_path(const MarkovKernel& kernel,
                                     const std::vector<double>& init,
                                     unsigned n, CounterRng& rng) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  std::vector<std::size_t> path(n);
  path[0] = inverse_cdf(std::span<const double>(init), rng.next_double());
  for (unsigned i = 1; i < n; ++i)
    path[i] = inverse_cdf(kernel.matrix.row(path[i - 1]), rng.next_double());
  return path;
}

double empirical_tv(const std::vector<std::size_t>& path, const Distribution& pi) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "empty path");
  std::vector<double> counts(pi.size(), 0.0);
  for (std::size_t x : path) counts[x] += 1.0;
  double s = 0.0;
  for (std::size_t x = 0; x < pi.size(); ++x)
    s += std::abs(counts[x] / path.size() - pi.weights[x]);
  return 0.5 * s;
}

TailExperimentReport tail_experiment(const MarkovKernel& kernel,
                                     const Distribution& pi,
                                     const ObservedFunction& f,
                                     const SimConfig& config,
                                     const std::vector<double>& t_grid,
                                     const std::vector<BoundCurve>& bounds) {
  double mean_f = 0.0;
  for (std::size_t x = 0; x < pi.size(); ++x)
    mean_f += pi.weights[x] * f.values[x];
  const double expected_sum = config.n * mean_f;
  const std::vector<double>& init =
      config.stationary_init ? pi.weights : config.init_weights;

  std::vector<double> deviations(config.trials);
  for (unsigned trial = 0; trial < config.trials; ++trial) {
    CounterRng rng(CounterRng::stream(config.seed, trial));
    const std::vector<std::size_t> path = sample_path(kernel, init, config.n, rng);
    double sum = 0.0;
    for (std::size_t x : path) sum += f.values[x];
    deviations[trial] = std::abs(sum - expected_sum);
  }
  std::sort(deviations.begin(), deviations.end());

  TailExperimentReport report;
  report.t_grid = t_grid;
  report.bound_values.resize(bounds.size());
  for (const BoundCurve& b : bounds) report.bound_names.push_back(b.name);
  for (double t : t_grid) {
    const auto first =
        std::lower_bound(deviations.begin(), deviations.end(), t);
    const double tail = static_cast<double>(deviations.end() - first) /
                        static_cast<double>(config.trials);
    report.empirical_tail.push_back(tail);
    report.standard_error.push_back(
        std::sqrt(tail * (1.0 - tail) / config.trials));
  }
  for (std::size_t bi = 0; bi < bounds.size(); ++bi) {
    for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
      const double bound = bounds[bi].bound(t_grid[ti]);
      report.bound_values[bi].push_back(bound);
      if (report.empirical_tail[ti] > bound + 3.0 * report.standard_error[ti])
        report.violations.emplace_back(bi, ti);
    }
  }
  return report;
}

TvExperimentReport tv_experiment(const MarkovKernel& kernel,
                                 const Distribution& pi, const SimConfig& config,
                                 unsigned t_mix, double gap, bool reversible,
                                 const std::vector<double>& t_grid) {
  const std::vector<double>& init =
      config.stationary_init ? pi.weights : config.init_weights;
  std::vector<double> tvs(config.trials);
  for (unsigned trial = 0; trial < config.trials; ++trial) {
    CounterRng rng(CounterRng::stream(config.seed, trial));
    tvs[trial] = empirical_tv(sample_path(kernel, init, config.n, rng), pi);
  }
  TvExperimentReport report;
  double mean = 0.0;
  for (double d : tvs) mean += d;
  mean /= config.trials;
  report.mean_tv = mean;
  report.mean_bound = empirical_tv_mean_bound(pi, config.n, gap, reversible);
  report.mean_ok = report.mean_tv <= report.mean_bound;

  report.t_grid = t_grid;
  for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
    const double t = t_grid[ti];
    std::size_t count = 0;
    for (double d : tvs)
      if (std::abs(d - mean) >= t) ++count;
    const double freq = static_cast<double>(count) / config.trials;
    const double se = std::sqrt(freq * (1.0 - freq) / config.trials);
    const double bound = std::min(
        2.0 * std::exp(-t * t * config.n / (8.0 * t_mix)), 1.0);
    report.empirical_concentration.push_back(freq);
    report.mcdiarmid_bound.push_back(bound);
    if (freq > bound + 3.0 * se) report.violations.push_back(ti);
  }
  return report;
}

}  // namespace markov
