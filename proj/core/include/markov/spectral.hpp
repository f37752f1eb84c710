#pragma once

#include <map>
#include <optional>
#include <vector>

#include "markov/kernel.hpp"

namespace markov {

struct PseudoGapResult {
  double gamma_ps = 0.0;
  unsigned k_ps = 0;  // smallest maximizer
  std::map<unsigned, std::vector<double>> eigenvalues_by_k;
  bool exhausted = false;  // k_max hit with best-so-far still 0
};

struct SpectralReport {
  bool reversible = false;
  std::optional<double> gamma;       // reversible kernels only
  std::optional<double> gamma_star;  // reversible kernels only
  double gamma_ps = 0.0;
  unsigned k_ps = 0;
  std::map<unsigned, std::vector<double>> eigenvalues_by_k;
  bool exhausted = false;
};

/// Full real spectrum of a matrix that is self-adjoint in the pi-weighted
/// inner product, i.e. D^{1/2} M D^{-1/2} symmetric with D = diag(pi).
/// Sorted descending. Raises NotSelfAdjoint past a 1e-10 symmetry defect.
std::vector<double> eigenvalues_self_adjoint(const Matrix& m,
                                             const Distribution& pi);

/// Spectral gap of a reversible kernel: 1 minus the second-largest eigenvalue,
/// 0 when eigenvalue 1 has numerical multiplicity above 1 (second eigenvalue
/// at least 1 - 1e-9). Raises NotReversible otherwise.
double spectral_gap(const MarkovKernel& kernel, const Distribution& pi);

/// 1 minus the largest modulus among non-top eigenvalues (reversible kernels).
double absolute_spectral_gap(const MarkovKernel& kernel, const Distribution& pi);

/// gamma_ps = max_k gamma((P*)^k P^k) / k. The search stops at the first k
/// with 1/k <= best-so-far; no later k can improve since each per-k gap is at
/// most 1. k_max caps the scan (default 64).
PseudoGapResult pseudo_spectral_gap(const MarkovKernel& kernel,
                                    const Distribution& pi,
                                    unsigned k_max = 64);

SpectralReport spectral_report(const MarkovKernel& kernel,
                               const Distribution& pi, unsigned k_max = 64);

/// Asymptotic variance of (1/sqrt(n)) sum f(X_i) via the fundamental-matrix
/// formula <f, [2(I-(P-Pi))^{-1} - I] f>_pi with f centered internally.
double asymptotic_variance(const MarkovKernel& kernel, const Distribution& pi,
                           const ObservedFunction& f);

/// Var_pi(f(X_1)+...+f(X_n)) exactly, as n V_f plus twice the lagged
/// covariances sum_{k=1}^{n-1} (n-k) <f, (P-Pi)^k f>_pi.
double exact_sum_variance(const MarkovKernel& kernel, const Distribution& pi,
                          const ObservedFunction& f, unsigned n);

/// Var_pi(f).
double stationary_variance(const Distribution& pi, const ObservedFunction& f);

}  // namespace markov
