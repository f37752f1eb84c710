#include "markov/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace markov {

namespace {

double require(const std::optional<double>& v, const char* name) {
  if (!v) throw Error(ErrorCode::MissingField, std::string("missing field ") + name);
  return *v;
}

double positive_gap(double g, const char* name) {
  if (g <= 0.0)
    throw Error(ErrorCode::NonPositiveGap, std::string(name) + " must be positive");
  return g;
}

TailBound finish(double factor, double exponent) {
  TailBound out;
  out.exponent = exponent;
  const double value = factor * std::exp(-exponent);
  out.clamped = value > 1.0;
  out.probability = std::min(value, 1.0);
  return out;
}

}  // namespace

VarianceReport variance_report(const MarkovKernel& kernel, const Distribution& pi,
                               const ObservedFunction& f, unsigned n) {
  VarianceReport report;
  report.n = n;
  report.v_f = stationary_variance(pi, f);
  report.sigma_as2 = asymptotic_variance(kernel, pi, f);
  report.exact = exact_sum_variance(kernel, pi, f, n);

  const PseudoGapResult ps = pseudo_spectral_gap(kernel, pi);
  if (ps.gamma_ps > 0.0) {
    report.bound_nonrev = 4.0 * n * report.v_f / ps.gamma_ps;
    report.bound_nonrev_sigma =
        n * report.sigma_as2 + 16.0 * report.v_f / (ps.gamma_ps * ps.gamma_ps);
    report.per_coordinate_bound = 4.0 / ps.gamma_ps * n * report.v_f;
  }
  if (is_reversible(kernel, pi)) {
    const double gamma = spectral_gap(kernel, pi);
    const double gamma_star = absolute_spectral_gap(kernel, pi);
    if (gamma > 0.0) {
      report.bound_rev = 2.0 * n * report.v_f / gamma;
      report.bound_rev_sigma =
          n * report.sigma_as2 + 4.0 * report.v_f / (gamma * gamma);
    }
    if (gamma_star > 0.0)
      report.per_coordinate_bound = 2.0 / gamma_star * n * report.v_f;
  }
  return report;
}

TailBound bernstein_tail(const BernsteinSpec& spec, double t) {
  if (t < 0.0) throw Error(ErrorCode::InvalidArgument, "t must be non-negative");
  const double factor = spec.one_sided ? 1.0 : 2.0;
  const double t2 = t * t;
  double exponent = 0.0;
  switch (spec.variant) {
    case BernsteinVariant::RevSigma: {
      const double gamma = positive_gap(require(spec.gamma, "gamma"), "gamma");
      const double sigma2 = require(spec.sigma_as2, "sigma_as2");
      const double denom =
          2.0 * spec.n * (sigma2 + 0.8 * spec.variance) + 10.0 * t * spec.c / gamma;
      exponent = denom > 0.0 ? t2 / denom : 0.0;
      break;
    }
    case BernsteinVariant::Rev: {
      const double gamma = positive_gap(require(spec.gamma, "gamma"), "gamma");
      const double denom = 4.0 * spec.n * spec.variance + 10.0 * t * spec.c;
      exponent = denom > 0.0 ? t2 * gamma / denom : 0.0;
      break;
    }
    case BernsteinVariant::RevGeneral: {
      const double gs =
          positive_gap(require(spec.gamma_star, "gamma_star"), "gamma_star");
      const double denom = 8.0 * spec.variance + 20.0 * t * spec.c;
      exponent = denom > 0.0 ? t2 * (2.0 * gs - gs * gs) / denom : 0.0;
      break;
    }
    case BernsteinVariant::NonRev: {
      const double gps =
          positive_gap(require(spec.gamma_ps, "gamma_ps"), "gamma_ps");
      const double denom =
          8.0 * (spec.n + 1.0 / gps) * spec.variance + 20.0 * t * spec.c;
      exponent = denom > 0.0 ? t2 * gps / denom : 0.0;
      break;
    }
    case BernsteinVariant::NonRevGeneral: {
      const double gps =
          positive_gap(require(spec.gamma_ps, "gamma_ps"), "gamma_ps");
      if (!spec.k_ps)
        throw Error(ErrorCode::MissingField, "missing field k_ps");
      if (!spec.v_i)
        throw Error(ErrorCode::MissingField, "missing field v_i");
      const double m = residue_ratio_m(*spec.v_i);
      const double denom =
          8.0 * spec.variance + 20.0 * t * spec.c * m / *spec.k_ps;
      exponent = denom > 0.0 ? t2 * gps / denom : 0.0;
      break;
    }
  }
  return finish(factor, exponent);
}

double residue_ratio_m(const std::vector<double>& v_i) {
  if (v_i.empty())
    throw Error(ErrorCode::MissingField, "empty residue variance list");
  double sum = 0.0;
  double min_root = std::numeric_limits<double>::infinity();
  for (double v : v_i) {
    if (v < 0.0) throw Error(ErrorCode::InvalidArgument, "negative variance");
    const double root = std::sqrt(v);
    sum += root;
    min_root = std::min(min_root, root);
  }
  if (min_root <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "zero residue variance makes M undefined");
  return sum / min_root;
}

std::vector<double> residue_variances(double v_f, unsigned n, unsigned k_ps) {
  if (k_ps < 1) throw Error(ErrorCode::InvalidArgument, "k_ps must be >= 1");
  std::vector<double> out(k_ps);
  for (unsigned i = 1; i <= k_ps; ++i)
    out[i - 1] = i <= n ? v_f * (1 + (n - i) / k_ps) : 0.0;  // #{j : i + j k_ps <= n}
  return out;
}

double nonstationary_adjust(double raw, NonstationaryMethod method, double param) {
  if (raw < 0.0 || raw > 1.0)
    throw Error(ErrorCode::InvalidArgument, "raw probability outside [0,1]");
  double value = 0.0;
  switch (method) {
    case NonstationaryMethod::Sqrt:
      value = std::sqrt(param) * std::sqrt(raw);
      break;
    case NonstationaryMethod::Additive:
      value = raw + param;
      break;
  }
  return std::clamp(value, 0.0, 1.0);
}

NqDecayResult nq_decay(double n_q, double t0, double gap, bool reversible) {
  if (n_q < 1.0) throw Error(ErrorCode::InvalidArgument, "N_q must be >= 1");
  if (gap <= 0.0 || gap > 1.0)
    throw Error(ErrorCode::NonPositiveGap, "gap must be in (0,1]");
  if (t0 < 0.0) throw Error(ErrorCode::InvalidArgument, "t0 must be >= 0");
  NqDecayResult out;
  const double expo = reversible ? 2.0 * t0 : 2.0 * (t0 - 1.0 / gap);
  const double value = 1.0 + (n_q - 1.0) * std::pow(1.0 - gap, expo);
  if (!reversible && expo < 0.0 && value > n_q) {
    out.bound = n_q;
    out.clamped = true;
  } else {
    out.bound = std::min(value, n_q);
  }
  return out;
}

double clip(double x, double a, double b) { return std::min(std::max(x, a), b); }

TailBound truncated_tail_bound(const MarkovKernel& kernel, const Distribution& pi,
                               const ObservedFunction& f, double a, double b,
                               unsigned n, double t,
                               const TailEvaluator& inner_bound) {
  if (a >= b) throw Error(ErrorCode::InvalidArgument, "need a < b");
  ObservedFunction clipped;
  clipped.values.reserve(f.values.size());
  for (double v : f.values) clipped.values.push_back(clip(v, a, b));

  double p_low = 0.0;
  double p_high = 0.0;
  for (std::size_t x = 0; x < pi.size(); ++x) {
    if (f.values[x] <= a) p_low += pi.weights[x];
    if (f.values[x] >= b) p_high += pi.weights[x];
  }
  const double inner = inner_bound(kernel, pi, clipped, n, t);
  const double value = inner + n * p_low + n * p_high;
  TailBound out;
  out.exponent = inner > 0.0 ? -std::log(inner) : 0.0;
  out.clamped = value > 1.0;
  out.probability = std::min(value, 1.0);
  return out;
}

TailBound mcdiarmid_markov_tail(const std::vector<double>& c, double tau_min,
                                double t) {
  if (tau_min <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "tau_min must be positive");
  double c2 = 0.0;
  for (double ci : c) {
    if (ci < 0.0) throw Error(ErrorCode::InvalidArgument, "c must be entrywise >= 0");
    c2 += ci * ci;
  }
  if (c2 == 0.0) throw Error(ErrorCode::ZeroNorm, "c is the zero vector");
  return finish(2.0, t * t / (2.0 * c2 * tau_min));
}

double empirical_tv_mean_bound(const Distribution& pi, unsigned n, double gap,
                               bool reversible) {
  if (gap <= 0.0) throw Error(ErrorCode::NonPositiveGap, "gap must be positive");
  const double g = reversible ? gap : gap / 2.0;
  double sum = 0.0;
  for (double px : pi.weights)
    sum += std::min(std::sqrt(2.0 * px / (n * g)), px);
  return sum;
}

}  // namespace markov
