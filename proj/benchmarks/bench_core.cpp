#include <benchmark/benchmark.h>

#include "markov/bounds.hpp"
#include "markov/marton.hpp"
#include "markov/mixing.hpp"
#include "markov/simulate.hpp"
#include "markov/spectral.hpp"

namespace {

using namespace markov;

MarkovKernel random_kernel(std::size_t n, std::uint64_t seed) {
  CounterRng rng(CounterRng::stream(seed, 0));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = rng.next_double() + 0.05;
      sum += m(i, j);
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) /= sum;
  }
  std::vector<std::string> states;
  for (std::size_t i = 0; i < n; ++i) states.push_back(std::to_string(i));
  return make_kernel(std::move(states), std::move(m));
}

void bm_stationary(benchmark::State& state) {
  const MarkovKernel p = random_kernel(state.range(0), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(stationary_distribution(p));
}
BENCHMARK(bm_stationary)->Arg(4)->Arg(16)->Arg(64);

void bm_pseudo_spectral_gap(benchmark::State& state) {
  const MarkovKernel p = random_kernel(state.range(0), 2);
  const Distribution pi = stationary_distribution(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(pseudo_spectral_gap(p, pi));
}
BENCHMARK(bm_pseudo_spectral_gap)->Arg(4)->Arg(8)->Arg(16);

void bm_mixing_profile(benchmark::State& state) {
  const MarkovKernel p = random_kernel(state.range(0), 3);
  const Distribution pi = stationary_distribution(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(mixing_profile(p, pi));
}
BENCHMARK(bm_mixing_profile)->Arg(4)->Arg(8)->Arg(16);

void bm_sample_path(benchmark::State& state) {
  const MarkovKernel p = random_kernel(8, 4);
  const Distribution pi = stationary_distribution(p);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    CounterRng rng(CounterRng::stream(9, trial++));
    benchmark::DoNotOptimize(
        sample_path(p, pi.weights, static_cast<unsigned>(state.range(0)), rng));
  }
}
BENCHMARK(bm_sample_path)->Arg(100)->Arg(1000)->Arg(10000);

void bm_operator_norm(benchmark::State& state) {
  const MixingMatrix g =
      markov_mixing_matrix(static_cast<std::size_t>(state.range(0)), 0.3);
  for (auto _ : state)
    benchmark::DoNotOptimize(operator_norm(g));
}
BENCHMARK(bm_operator_norm)->Arg(10)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
