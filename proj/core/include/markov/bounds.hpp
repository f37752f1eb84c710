#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "markov/kernel.hpp"
#include "markov/spectral.hpp"

namespace markov {

struct VarianceReport {
  unsigned n = 0;
  double v_f = 0.0;
  double sigma_as2 = 0.0;
  double exact = 0.0;
  std::optional<double> bound_rev;          // 2 n V_f / gamma
  std::optional<double> bound_rev_sigma;    // n sigma^2 + 4 V_f / gamma^2
  double bound_nonrev = 0.0;                // 4 n V_f / gamma_ps
  double bound_nonrev_sigma = 0.0;          // n sigma^2 + 16 V_f / gamma_ps^2
  std::optional<double> per_coordinate_bound;  // 2/gamma* resp. 4/gamma_ps times sum Var
};

VarianceReport variance_report(const MarkovKernel& kernel, const Distribution& pi,
                               const ObservedFunction& f, unsigned n);

enum class BernsteinVariant { RevSigma, Rev, RevGeneral, NonRev, NonRevGeneral };

/// Inputs for one Bernstein tail evaluation; fill the fields the variant uses.
struct BernsteinSpec {
  BernsteinVariant variant = BernsteinVariant::Rev;
  unsigned n = 0;
  double variance = 0.0;  // V_f, or V_{S'} for the General variants
  std::optional<double> sigma_as2;
  double c = 0.0;  // a.s. bound on |f - E f|
  std::optional<double> gamma;
  std::optional<double> gamma_star;
  std::optional<double> gamma_ps;
  std::optional<unsigned> k_ps;
  std::optional<std::vector<double>> v_i;  // per-residue variances (NonRevGeneral)
  bool one_sided = false;                  // drop the leading factor 2
};

struct TailBound {
  double probability = 1.0;
  double exponent = 0.0;
  bool clamped = false;
};

/// P(|S - E S| >= t) <= factor * exp(-exponent), clamped into [0,1].
/// Exponents per variant:
///  RevSigma       t^2 / (2n(sigma^2 + 0.8 V_f) + 10 t C / gamma)
///  Rev            t^2 gamma / (4 n V_f + 10 t C)
///  RevGeneral     t^2 (2 gamma* - gamma*^2) / (8 V_{S'} + 20 t C)
///  NonRev         t^2 gamma_ps / (8 (n + 1/gamma_ps) V_f + 20 t C)
///  NonRevGeneral  t^2 gamma_ps / (8 V_{S'} + 20 t C M / k_ps)
TailBound bernstein_tail(const BernsteinSpec& spec, double t);

/// M = (sum_i V_i^{1/2}) / min_i V_i^{1/2} over the k_ps residue classes.
double residue_ratio_m(const std::vector<double>& v_i);

/// V_i = sum_j Var(f_{i + j k_ps}) for residue classes i = 1..k_ps, with the
/// same observable at every time index.
std::vector<double> residue_variances(double v_f, unsigned n, unsigned k_ps);

enum class NonstationaryMethod { Sqrt, Additive };

/// Sqrt:      N_q^{1/2} raw^{1/2}   Additive: raw + d_tv.
/// Pass N_q for Sqrt, the TV distance for Additive. Result clamped to [0,1].
double nonstationary_adjust(double raw, NonstationaryMethod method, double param);

struct NqDecayResult {
  double bound = 1.0;
  bool clamped = false;  // non-reversible variant with t0 < 1/gamma_ps
};

/// N_{q P^{t0}} <= 1 + (N_q - 1)(1 - gamma*)^{2 t0}; the non-reversible
/// variant uses (1 - gamma_ps)^{2(t0 - 1/gamma_ps)} and clamps to the trivial
/// bound N_q when the exponent is negative.
NqDecayResult nq_decay(double n_q, double t0, double gap, bool reversible);

/// Clip to [a,b].
double clip(double x, double a, double b);

using TailEvaluator =
    std::function<double(const MarkovKernel&, const Distribution&,
                         const ObservedFunction&, unsigned n, double t)>;

/// Tail of sum f(X_i) >= t via the clipped observable plus the exact
/// per-step escape probabilities n pi(f <= a) + n pi(f >= b).
TailBound truncated_tail_bound(const MarkovKernel& kernel, const Distribution& pi,
                               const ObservedFunction& f, double a, double b,
                               unsigned n, double t,
                               const TailEvaluator& inner_bound);

/// 2 exp(-t^2 / (2 ||c||^2 tau_min)), clamped to [0,1].
TailBound mcdiarmid_markov_tail(const std::vector<double>& c, double tau_min,
                                double t);

/// E d_TV(pi_em, pi) <= sum_x min(sqrt(2 pi(x)/(n g)), pi(x)) with g = gamma
/// for reversible chains and gamma_ps/2 otherwise.
double empirical_tv_mean_bound(const Distribution& pi, unsigned n, double gap,
                               bool reversible);

}  // namespace markov
