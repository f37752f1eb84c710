#include "markov/hypothesis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace markov {

namespace {

// Mean and variance of log(P0/P1) under the stationary pair law of p.
std::pair<double, double> log_ratio_moments(const Matrix& log_ratio,
                                            const MarkovKernel& p,
                                            const Distribution& pi) {
  const std::size_t n = p.size();
  double mean = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      mean += pi.weights[x] * p.matrix(x, y) * log_ratio(x, y);
  double var = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const double d = log_ratio(x, y) - mean;
      var += pi.weights[x] * p.matrix(x, y) * d * d;
    }
  return {mean, var};
}

double log_range(const MarkovKernel& p) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      const double l = std::log(p.matrix(x, y));
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
  return hi - lo;
}

void require_positive(const MarkovKernel& p, const char* name) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.matrix(x, y) <= 0.0)
        throw Error(ErrorCode::ZeroTransitionProbability,
                    std::string(name) + " has a zero transition probability");
}

}  // namespace

HypothesisTest build_test(const MarkovKernel& p0, const MarkovKernel& p1,
                          double xi) {
  if (p0.states != p1.states)
    throw Error(ErrorCode::ShapeMismatch, "hypotheses over different state sets");
  require_positive(p0, "P0");
  require_positive(p1, "P1");

  HypothesisTest test;
  test.p0 = p0;
  test.p1 = p1;
  test.xi = xi;
  test.pi0 = stationary_distribution(p0);
  test.pi1 = stationary_distribution(p1);
  test.delta0 = log_range(p0);
  test.delta1 = log_range(p1);
  test.delta = test.delta0 + test.delta1;

  const std::size_t n = p0.size();
  Matrix log_ratio(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      log_ratio(x, y) = std::log(p0.matrix(x, y)) - std::log(p1.matrix(x, y));
  std::tie(test.j0, test.v0) = log_ratio_moments(log_ratio, p0, test.pi0);
  std::tie(test.j1, test.v1) = log_ratio_moments(log_ratio, p1, test.pi1);

  test.q0 = pair_chain(p0);
  test.q1 = pair_chain(p1);
  const PseudoGapResult ps0 =
      pseudo_spectral_gap(test.q0.kernel, test.q0.stationary);
  const PseudoGapResult ps1 =
      pseudo_spectral_gap(test.q1.kernel, test.q1.stationary);
  test.gamma_ps_q0 = ps0.gamma_ps;
  test.k_ps_q0 = ps0.k_ps;
  test.gamma_ps_q1 = ps1.gamma_ps;
  test.k_ps_q1 = ps1.k_ps;
  return test;
}

StatisticResult statistic(const HypothesisTest& test,
                          const std::vector<std::string>& observations) {
  if (observations.size() < 2)
    throw Error(ErrorCode::TooShort, "need at least two observations");
  std::vector<std::size_t> idx(observations.size());
  for (std::size_t i = 0; i < observations.size(); ++i) {
    const auto found = test.p0.state_index(observations[i]);
    if (!found)
      throw Error(ErrorCode::UnknownState, "unknown state " + observations[i]);
    idx[i] = *found;
  }

  double pair_sum = 0.0;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    pair_sum += std::log(test.p0.matrix(idx[i], idx[i + 1])) -
                std::log(test.p1.matrix(idx[i], idx[i + 1]));
  const double prior = std::log(test.pi0.weights[idx[0]]) -
                       std::log(test.pi1.weights[idx[0]]);
  const double nm1 = static_cast<double>(idx.size() - 1);

  StatisticResult out;
  out.n = idx.size();
  out.pair_statistic = pair_sum / nm1;
  out.statistic = (prior + pair_sum) / nm1;
  return out;
}

ErrorBounds error_bounds(const HypothesisTest& test, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::TooShort, "need n >= 2");
  const double nm1 = static_cast<double>(n - 1);
  const double shift = test.delta / nm1;
  const double margin0 = test.j0 - shift - test.xi;
  const double margin1 = test.xi - test.j1 - shift;
  if (margin0 < 0.0 || margin1 < 0.0)
    throw Error(ErrorCode::ThresholdOutOfRange,
                "need J0 - delta/(n-1) >= xi >= J1 + delta/(n-1)");

  ErrorBounds out;
  out.exponent1 = margin0 * margin0 * nm1 * test.gamma_ps_q0 /
                  (8.0 * test.v0 + 20.0 * test.delta * margin0);
  out.exponent2 = margin1 * margin1 * nm1 * test.gamma_ps_q1 /
                  (8.0 * test.v1 + 20.0 * test.delta * margin1);
  out.type1 = std::min(std::exp(-out.exponent1), 1.0);
  out.type2 = std::min(std::exp(-out.exponent2), 1.0);
  return out;
}

TestReport decide(const HypothesisTest& test,
                  const std::vector<std::string>& observations) {
  TestReport report;
  report.statistic = statistic(test, observations);
  report.decision =
      report.statistic.statistic > test.xi ? Decision::StandBy : Decision::Reject;
  report.bounds = error_bounds(test, report.statistic.n);
  return report;
}

std::vector<std::string> parse_observations(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string tok;
  bool binary = true;
  while (in >> tok) {
    for (char ch : tok)
      if (ch != '0' && ch != '1') binary = false;
    tokens.push_back(tok);
  }
  bool has_long = std::any_of(tokens.begin(), tokens.end(),
                              [](const std::string& s) { return s.size() > 1; });
  if (binary && has_long) {
    std::vector<std::string> split;
    for (const std::string& s : tokens)
      for (char ch : s) split.emplace_back(1, ch);
    return split;
  }
  return tokens;
}

}  // namespace markov
