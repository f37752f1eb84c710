#include "markov/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

namespace markov {

namespace {
constexpr double kStochTol = 1e-12;
}

double Distribution::min_mass() const {
  double m = std::numeric_limits<double>::infinity();
  for (double w : weights) m = std::min(m, w);
  return m;
}

std::optional<std::size_t> MarkovKernel::state_index(const std::string& label) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == label) return i;
  return std::nullopt;
}

MarkovKernel make_kernel(std::vector<std::string> states, Matrix matrix) {
  const std::size_t n = states.size();
  if (n == 0) throw Error(ErrorCode::ShapeMismatch, "kernel needs at least one state");
  if (matrix.rows() != n || matrix.cols() != n)
    throw Error(ErrorCode::ShapeMismatch, "matrix shape does not match state count");
  std::unordered_set<std::string> seen(states.begin(), states.end());
  if (seen.size() != n)
    throw Error(ErrorCode::InvalidArgument, "state labels must be distinct");

  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double p = matrix(i, j);
      if (p < -kStochTol)
        throw Error(ErrorCode::NegativeEntry,
                    "negative transition probability in row " + states[i]);
      row_sum += p;
    }
    if (std::abs(row_sum - 1.0) > kStochTol)
      throw Error(ErrorCode::NonStochastic,
                  "row " + states[i] + " sums to " + std::to_string(row_sum));
    for (std::size_t j = 0; j < n; ++j) {
      matrix(i, j) = std::max(matrix(i, j), 0.0) / row_sum;
    }
  }
  return MarkovKernel{std::move(states), std::move(matrix)};
}

Distribution make_distribution(std::vector<std::string> states,
                               std::vector<double> weights) {
  if (states.size() != weights.size())
    throw Error(ErrorCode::ShapeMismatch, "weights do not match state count");
  double sum = 0.0;
  for (double w : weights) {
    if (w < -kStochTol || w > 1.0 + kStochTol)
      throw Error(ErrorCode::NegativeEntry, "weight outside [0,1]");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kStochTol)
    throw Error(ErrorCode::NonStochastic, "weights sum to " + std::to_string(sum));
  for (double& w : weights) w = std::max(w, 0.0) / sum;
  return Distribution{std::move(states), std::move(weights)};
}

Distribution stationary_distribution(const MarkovKernel& kernel,
                                     const StationaryOptions& opts) {
  const std::size_t n = kernel.size();
  const Matrix& p = kernel.matrix;

  // Multiplicity of eigenvalue 1 equals the nullity of P - I; two or more
  // recurrent classes make pi non-unique.
  Matrix p_minus_i = p;
  for (std::size_t i = 0; i < n; ++i) p_minus_i(i, i) -= 1.0;
  if (nullity(p_minus_i) > 1)
    throw Error(ErrorCode::NonUniqueStationary,
                "eigenvalue 1 has numerical multiplicity above 1");

  // Lazy transpose iteration; the (P+I)/2 step removes periodicity.
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  for (long it = 0; it < opts.max_iterations; ++it) {
    std::vector<double> next(n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
      next[x] += 0.5 * v[x];
      for (std::size_t y = 0; y < n; ++y) next[y] += 0.5 * v[x] * p(x, y);
    }
    double sum = 0.0;
    for (double w : next) sum += w;
    for (double& w : next) w /= sum;
    double diff = 0.0;
    for (std::size_t x = 0; x < n; ++x)
      diff = std::max(diff, std::abs(next[x] - v[x]));
    v = std::move(next);
    if (diff < opts.tol) {
      std::vector<double> pv(n, 0.0);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) pv[y] += v[x] * p(x, y);
      double res = 0.0;
      for (std::size_t x = 0; x < n; ++x)
        res = std::max(res, std::abs(pv[x] - v[x]));
      if (res > 1e-10)
        throw Error(ErrorCode::NoConvergence, "stationary residual too large");
      for (double& w : v) w = std::clamp(w, 0.0, 1.0);
      return Distribution{kernel.states, std::move(v)};
    }
  }
  throw Error(ErrorCode::NoConvergence, "stationary iteration budget exhausted");
}

MarkovKernel time_reversal(const MarkovKernel& kernel, const Distribution& pi) {
  const std::size_t n = kernel.size();
  for (std::size_t x = 0; x < n; ++x)
    if (pi.weights[x] <= 0.0)
      throw Error(ErrorCode::ZeroStationaryMass,
                  "state " + kernel.states[x] + " has zero stationary mass");
  Matrix rev(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      rev(x, y) = pi.weights[y] * kernel.matrix(y, x) / pi.weights[x];
  return make_kernel(kernel.states, std::move(rev));
}

bool is_reversible(const MarkovKernel& kernel, const Distribution& pi,
                   double tol) {
  const std::size_t n = kernel.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const double flow = pi.weights[x] * kernel.matrix(x, y) -
                          pi.weights[y] * kernel.matrix(y, x);
      if (std::abs(flow) > tol) return false;
    }
  return true;
}

PairChain pair_chain(const MarkovKernel& kernel) {
  const std::size_t n = kernel.size();
  const Distribution pi = stationary_distribution(kernel);
  const std::size_t m = n * n;
  std::vector<std::string> pair_states(m);
  Matrix q(m, m);
  std::vector<double> pair_pi(m);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t s = x * n + y;
      pair_states[s] = kernel.states[x] + kernel.states[y];
      pair_pi[s] = pi.weights[x] * kernel.matrix(x, y);
      for (std::size_t z = 0; z < n; ++z) q(s, y * n + z) = kernel.matrix(y, z);
    }
  }
  Distribution pair_dist{pair_states, std::move(pair_pi)};
  return PairChain{make_kernel(std::move(pair_states), std::move(q)),
                   std::move(pair_dist)};
}

Matrix reversiblization_matrix(const MarkovKernel& kernel,
                               const Distribution& pi, unsigned k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  const MarkovKernel rev = time_reversal(kernel, pi);
  return rev.matrix.power(k) * kernel.matrix.power(k);
}

double chi_square_nq(const Distribution& q, const Distribution& pi) {
  if (q.size() != pi.size())
    throw Error(ErrorCode::ShapeMismatch, "distributions over different state sets");
  double sum = 0.0;
  for (std::size_t x = 0; x < q.size(); ++x) {
    if (pi.weights[x] <= 0.0) {
      if (q.weights[x] > 0.0) return std::numeric_limits<double>::infinity();
      continue;
    }
    sum += q.weights[x] * q.weights[x] / pi.weights[x];
  }
  return sum;
}

}  // namespace markov
