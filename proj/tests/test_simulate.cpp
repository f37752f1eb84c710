#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "markov/bounds.hpp"
#include "markov/simulate.hpp"
#include "markov/spectral.hpp"

using namespace markov;
using namespace markov::testing;

TEST_CASE("path sampling") {
  const MarkovKernel flip = flip_chain();
  CounterRng rng(CounterRng::stream(1, 0));
  const auto path = sample_path(flip, {1.0, 0.0}, 6, rng);
  CHECK(path == std::vector<std::size_t>{0, 1, 0, 1, 0, 1});

  // same stream key, same path
  CounterRng a(CounterRng::stream(42, 7));
  CounterRng b(CounterRng::stream(42, 7));
  const MarkovKernel p = random_kernel(4, 3);
  const Distribution pi = stationary_distribution(p);
  CHECK(sample_path(p, pi.weights, 64, a) == sample_path(p, pi.weights, 64, b));

  // different trials decorrelate
  CounterRng c(CounterRng::stream(42, 8));
  CHECK(sample_path(p, pi.weights, 64, a) != sample_path(p, pi.weights, 64, c));
}

TEST_CASE("i.i.d. sampling matches the target law") {
  const MarkovKernel r1 = rank_one({0.25, 0.75});
  const Distribution pi = stationary_distribution(r1);
  CounterRng rng(CounterRng::stream(5, 0));
  const unsigned n = 100000;
  const auto path = sample_path(r1, pi.weights, n, rng);
  std::vector<double> counts(2, 0.0);
  for (std::size_t x : path) counts[x] += 1.0;
  for (std::size_t x = 0; x < 2; ++x) {
    const double se = std::sqrt(pi.weights[x] * (1.0 - pi.weights[x]) / n);
    CHECK(std::abs(counts[x] / n - pi.weights[x]) <= 3.0 * se);
  }
}

TEST_CASE("empirical TV distance") {
  const Distribution uniform = make_distribution({"0", "1"}, {0.5, 0.5});
  CHECK(empirical_tv({0, 1}, uniform) == doctest::Approx(0.0));
  CHECK(empirical_tv({0, 0, 0, 0}, uniform) == doctest::Approx(0.5));
  const Distribution skew = make_distribution({"0", "1"}, {0.3, 0.7});
  CHECK(empirical_tv({1}, skew) == doctest::Approx(1.0 - 0.7).epsilon(1e-12));
}

TEST_CASE("tail experiment certifies the i.i.d. Bernstein bound") {
  const MarkovKernel r1 = rank_one({0.5, 0.5});
  const Distribution pi = stationary_distribution(r1);
  const ObservedFunction pm{{1.0, -1.0}};

  SimConfig config;
  config.seed = 2024;
  config.trials = 20000;
  config.n = 100;

  BernsteinSpec spec;
  spec.variant = BernsteinVariant::Rev;
  spec.n = config.n;
  spec.variance = 1.0;
  spec.c = 1.0;
  spec.gamma = 1.0;
  const std::vector<BoundCurve> curves = {
      {"rev", [spec](double t) { return bernstein_tail(spec, t).probability; }}};

  const std::vector<double> t_grid = {5, 10, 15, 20, 25, 30, 40, 120};
  const TailExperimentReport rep =
      tail_experiment(r1, pi, pm, config, t_grid, curves);
  CHECK(rep.violations.empty());
  // empirical tail is non-increasing
  for (std::size_t i = 1; i < rep.empirical_tail.size(); ++i)
    CHECK(rep.empirical_tail[i] <= rep.empirical_tail[i - 1] + 1e-15);
  // beyond the support of S the empirical tail is exactly zero
  CHECK(rep.empirical_tail.back() == 0.0);
  CHECK(rep.bound_values[0].back() > 0.0);

  // determinism: identical config gives an identical report
  const TailExperimentReport rep2 =
      tail_experiment(r1, pi, pm, config, t_grid, curves);
  CHECK(rep.empirical_tail == rep2.empirical_tail);
}

TEST_CASE("TV experiment respects mean and concentration bounds") {
  const MarkovKernel r1 = rank_one({0.5, 0.5});
  const Distribution pi = stationary_distribution(r1);
  SimConfig config;
  config.seed = 7;
  config.trials = 5000;
  config.n = 200;
  const std::vector<double> t_grid = {0.02, 0.05, 0.1, 0.2};
  const TvExperimentReport rep =
      tv_experiment(r1, pi, config, /*t_mix=*/1, /*gap=*/1.0,
                    /*reversible=*/true, t_grid);
  CHECK(rep.mean_ok);
  CHECK(rep.mean_tv <= std::sqrt(2.0 * 2.0 / (200.0 * 1.0)));
  CHECK(rep.violations.empty());
}
