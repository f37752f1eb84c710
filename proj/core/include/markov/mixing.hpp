#pragma once

#include <map>
#include <optional>
#include <vector>

#include "markov/kernel.hpp"

namespace markov {

struct MixingReport {
  std::vector<std::pair<unsigned, double>> d_table;     // (t, d(t))
  std::vector<std::pair<unsigned, double>> dbar_table;  // (t, dbar(t))
  std::map<double, unsigned> t_mix_eps;  // eps -> min t with d(t) <= eps
  std::map<double, unsigned> tau_eps;    // eps -> min t with dbar(t) <= eps
  std::optional<double> tau_min;         // min_t t/(1-dbar(t))^2 over dbar(t) < 1
  unsigned t_max_scanned = 0;
  bool t_max_too_small = false;  // some requested eps not reached by t_max

  std::optional<unsigned> t_mix(double eps) const;
  std::optional<unsigned> tau(double eps) const;
};

struct MixingOptions {
  std::vector<double> eps_values = {0.25, 0.125, 0.0625};
  std::optional<unsigned> t_max;  // default 64 * n_states
};

/// Half the L1 distance between two probability vectors.
double tv_distance(const Distribution& p, const Distribution& q);
double tv_distance(std::span<const double> p, std::span<const double> q);

/// Exact d(t) = max_x TV(P^t(x,.), pi) and dbar(t) = max_{x,y} TV of rows,
/// for t = 1..t_max, with the threshold maps and tau_min derived from them.
/// A requested eps not reached by t_max sets the t_max_too_small flag; the
/// partial report is still returned.
MixingReport mixing_profile(const MarkovKernel& kernel, const Distribution& pi,
                            const MixingOptions& opts = {});

struct GapLowerBounds {
  double gamma_star_lb = 0.0;  // reversible chains only
  double gamma_ps_lb = 0.0;
};

/// Best lower bounds over the report's finite tau(eps) entries:
/// gamma* >= 1/(1 + tau(eps)/log(1/eps)) and gamma_ps >= (1-eps)/tau(eps).
/// Raises NoFiniteTau if no scanned eps was reached.
GapLowerBounds gap_lower_bounds_from_mixing(const MixingReport& report,
                                            bool reversible);

/// t_mix(eps) <= (2 log(1/(2 eps)) + log(1/pi_min)) / (2 gamma*) for
/// reversible chains; (1 + 2 log(1/(2 eps)) + log(1/pi_min)) / gamma_ps
/// otherwise.
double mixing_upper_bound_from_gap(double gap, double pi_min, double eps,
                                   bool reversible);

enum class TvDecayVariant { Reversible, NonReversible, Uniform };

struct TvDecayResult {
  double bound = 1.0;
  bool clamped = false;
};

/// TV decay after n steps from an initial distribution with divergence N_q:
///  Reversible      0.5 (1-gamma*)^n sqrt(N_q - 1)
///  NonReversible   0.5 (1-gamma_ps)^{(n - 1/gamma_ps)/2} sqrt(N_q - 1)
///  Uniform         min over scanned eps of eps^{floor(n/tau(eps))}, and
///                  2^{-floor(n/t_mix)} when only t_mix is available.
/// For Uniform pass the mixing report; gap and n_q are ignored.
TvDecayResult tv_decay_bound(unsigned n, double n_q, double gap,
                             TvDecayVariant variant,
                             const MixingReport* report = nullptr);

}  // namespace markov
