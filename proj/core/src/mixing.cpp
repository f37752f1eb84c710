#include "markov/mixing.hpp"

#include <algorithm>
#include <cmath>

namespace markov {

std::optional<unsigned> MixingReport::t_mix(double eps) const {
  auto it = t_mix_eps.find(eps);
  if (it == t_mix_eps.end()) return std::nullopt;
  return it->second;
}

std::optional<unsigned> MixingReport::tau(double eps) const {
  auto it = tau_eps.find(eps);
  if (it == tau_eps.end()) return std::nullopt;
  return it->second;
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size())
    throw Error(ErrorCode::ShapeMismatch, "distributions over different state sets");
  double s = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) s += std::abs(p[x] - q[x]);
  return 0.5 * s;
}

double tv_distance(const Distribution& p, const Distribution& q) {
  return tv_distance(std::span<const double>(p.weights),
                     std::span<const double>(q.weights));
}

MixingReport mixing_profile(const MarkovKernel& kernel, const Distribution& pi,
                            const MixingOptions& opts) {
  const std::size_t n = kernel.size();
  const unsigned t_max =
      opts.t_max.value_or(static_cast<unsigned>(64 * n));
  if (t_max < 1) throw Error(ErrorCode::InvalidArgument, "t_max must be >= 1");

  MixingReport report;
  report.t_max_scanned = t_max;
  report.d_table.reserve(t_max);
  report.dbar_table.reserve(t_max);

  Matrix pt = kernel.matrix;
  for (unsigned t = 1; t <= t_max; ++t) {
    if (t > 1) pt = pt * kernel.matrix;
    double d = 0.0;
    for (std::size_t x = 0; x < n; ++x)
      d = std::max(d, tv_distance(pt.row(x), std::span<const double>(pi.weights)));
    double dbar = 0.0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        dbar = std::max(dbar, tv_distance(pt.row(x), pt.row(y)));
    report.d_table.emplace_back(t, d);
    report.dbar_table.emplace_back(t, dbar);

    for (double eps : opts.eps_values) {
      if (d <= eps && !report.t_mix_eps.count(eps)) report.t_mix_eps[eps] = t;
      if (dbar <= eps && !report.tau_eps.count(eps)) report.tau_eps[eps] = t;
    }
    if (dbar < 1.0) {
      const double cand = t / ((1.0 - dbar) * (1.0 - dbar));
      if (!report.tau_min || cand < *report.tau_min) report.tau_min = cand;
    }
  }

  for (double eps : opts.eps_values)
    if (!report.t_mix_eps.count(eps) || !report.tau_eps.count(eps))
      report.t_max_too_small = true;
  return report;
}

GapLowerBounds gap_lower_bounds_from_mixing(const MixingReport& report,
                                            bool reversible) {
  GapLowerBounds out;
  bool any = false;
  for (const auto& [eps, tau] : report.tau_eps) {
    if (eps >= 1.0) continue;
    any = true;
    out.gamma_ps_lb = std::max(out.gamma_ps_lb, (1.0 - eps) / tau);
    if (reversible && eps > 0.0)
      out.gamma_star_lb =
          std::max(out.gamma_star_lb, 1.0 / (1.0 + tau / std::log(1.0 / eps)));
  }
  // t_mix specializations: gamma* >= 1/(1 + t_mix/log 2), gamma_ps >= 1/(2 t_mix)
  if (auto t = report.t_mix(0.25)) {
    any = true;
    out.gamma_ps_lb = std::max(out.gamma_ps_lb, 1.0 / (2.0 * *t));
    if (reversible)
      out.gamma_star_lb =
          std::max(out.gamma_star_lb, 1.0 / (1.0 + *t / std::log(2.0)));
  }
  if (!any)
    throw Error(ErrorCode::NoFiniteTau, "no scanned eps reached within t_max");
  return out;
}

double mixing_upper_bound_from_gap(double gap, double pi_min, double eps,
                                   bool reversible) {
  if (gap <= 0.0) throw Error(ErrorCode::ZeroGap, "gap must be positive");
  if (pi_min <= 0.0 || pi_min > 1.0)
    throw Error(ErrorCode::InvalidArgument, "pi_min must be in (0,1]");
  const double log_term = 2.0 * std::log(1.0 / (2.0 * eps)) + std::log(1.0 / pi_min);
  return reversible ? log_term / (2.0 * gap) : (1.0 + log_term) / gap;
}

TvDecayResult tv_decay_bound(unsigned n, double n_q, double gap,
                             TvDecayVariant variant,
                             const MixingReport* report) {
  double value;
  switch (variant) {
    case TvDecayVariant::Reversible:
      value = 0.5 * std::pow(1.0 - gap, n) * std::sqrt(std::max(n_q - 1.0, 0.0));
      break;
    case TvDecayVariant::NonReversible: {
      if (gap <= 0.0) throw Error(ErrorCode::ZeroGap, "gap must be positive");
      const double expo = (static_cast<double>(n) - 1.0 / gap) / 2.0;
      value = 0.5 * std::pow(1.0 - gap, expo) * std::sqrt(std::max(n_q - 1.0, 0.0));
      break;
    }
    case TvDecayVariant::Uniform: {
      if (!report)
        throw Error(ErrorCode::MissingField, "uniform variant needs a mixing report");
      value = 1.0;
      for (const auto& [eps, tau] : report->tau_eps)
        if (eps < 1.0)
          value = std::min(value, std::pow(eps, std::floor(double(n) / tau)));
      if (auto t = report->t_mix(0.25))
        value = std::min(value, std::pow(2.0, -std::floor(double(n) / *t)));
      break;
    }
  }
  TvDecayResult out;
  out.clamped = value > 1.0;
  out.bound = std::min(value, 1.0);
  return out;
}

}  // namespace markov
