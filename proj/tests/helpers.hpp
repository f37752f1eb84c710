#pragma once

#include <string>
#include <vector>

#include "markov/kernel.hpp"
#include "markov/simulate.hpp"

namespace markov::testing {

inline MarkovKernel two_state(double p_stay) {
  Matrix m(2, 2);
  m(0, 0) = m(1, 1) = p_stay;
  m(0, 1) = m(1, 0) = 1.0 - p_stay;
  return make_kernel({"0", "1"}, std::move(m));
}

inline MarkovKernel fair_coin() { return two_state(0.5); }

inline MarkovKernel biased_coin() { return two_state(0.6); }

inline MarkovKernel flip_chain() { return two_state(0.0); }

/// All rows equal to the given distribution: one-step coupling to pi.
inline MarkovKernel rank_one(const std::vector<double>& pi) {
  Matrix m(pi.size(), pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = 0; j < pi.size(); ++j) m(i, j) = pi[j];
  std::vector<std::string> states;
  for (std::size_t i = 0; i < pi.size(); ++i) states.push_back(std::to_string(i));
  return make_kernel(std::move(states), std::move(m));
}

inline std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

/// Strictly positive random kernel: entries u + 0.05, rows normalized.
inline MarkovKernel random_kernel(std::size_t n, std::uint64_t seed) {
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
  return make_kernel(labels(n), std::move(m));
}

/// Reversible by construction: P(i,j) proportional to a symmetric positive
/// weight w(i,j), so detailed balance holds for pi(i) proportional to row sums.
inline MarkovKernel random_reversible_kernel(std::size_t n, std::uint64_t seed) {
  CounterRng rng(CounterRng::stream(seed, 1));
  Matrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = rng.next_double() + 0.05;
      w(i, j) = v;
      w(j, i) = v;
    }
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += w(i, j);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = w(i, j) / sum;
  }
  return make_kernel(labels(n), std::move(m));
}

inline ObservedFunction random_function(std::size_t n, std::uint64_t seed) {
  CounterRng rng(CounterRng::stream(seed, 2));
  ObservedFunction f;
  for (std::size_t i = 0; i < n; ++i)
    f.values.push_back(2.0 * rng.next_double() - 1.0);
  return f;
}

}  // namespace markov::testing
