#pragma once

#include <string>
#include <vector>

#include "markov/kernel.hpp"
#include "markov/spectral.hpp"

namespace markov {

/// Likelihood-ratio test between two fully supported chain hypotheses, with
/// all the pair-chain quantities the error bounds consume precomputed.
struct HypothesisTest {
  MarkovKernel p0, p1;
  Distribution pi0, pi1;
  PairChain q0, q1;
  double delta0 = 0.0, delta1 = 0.0, delta = 0.0;  // log-ratio ranges
  double j0 = 0.0, j1 = 0.0;  // mean per-step log ratio under each hypothesis
  double v0 = 0.0, v1 = 0.0;  // its stationary variance under each hypothesis
  double gamma_ps_q0 = 0.0, gamma_ps_q1 = 0.0;
  unsigned k_ps_q0 = 0, k_ps_q1 = 0;
  double xi = 0.0;  // decision threshold on T(X)/(n-1)
};

enum class Decision { StandBy, Reject };

struct StatisticResult {
  double statistic = 0.0;       // T(X)/(n-1), prior term included
  double pair_statistic = 0.0;  // T_hat(Y)/(n-1)
  std::size_t n = 0;
};

struct ErrorBounds {
  double type1 = 1.0;
  double type2 = 1.0;
  double exponent1 = 0.0;
  double exponent2 = 0.0;
};

struct TestReport {
  StatisticResult statistic;
  Decision decision = Decision::StandBy;
  ErrorBounds bounds;
};

/// Derives every test quantity from the two kernels. Both must be strictly
/// positive entrywise (otherwise delta is infinite: ZeroTransitionProbability).
HypothesisTest build_test(const MarkovKernel& p0, const MarkovKernel& p1,
                          double xi);

/// Log-likelihood ratio per transition, T(X)/(n-1), on a label sequence.
StatisticResult statistic(const HypothesisTest& test,
                          const std::vector<std::string>& observations);

/// One-sided Bernstein bounds on the Type-I / Type-II errors for sample size
/// n. Requires J0 - delta/(n-1) >= xi >= J1 + delta/(n-1).
ErrorBounds error_bounds(const HypothesisTest& test, std::size_t n);

/// Threshold rule: statistic > xi stands by H0, <= xi rejects it.
TestReport decide(const HypothesisTest& test,
                  const std::vector<std::string>& observations);

/// Parses observations: whitespace-separated labels; a file of contiguous 0/1
/// characters is split into single-character labels.
std::vector<std::string> parse_observations(const std::string& text);

}  // namespace markov
