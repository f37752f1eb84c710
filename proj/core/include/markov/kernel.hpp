#pragma once

#include <optional>
#include <string>
#include <vector>

#include "markov/linalg.hpp"

namespace markov {

/// Probability vector over a labelled state set.
struct Distribution {
  std::vector<std::string> states;
  std::vector<double> weights;

  std::size_t size() const noexcept { return weights.size(); }
  double min_mass() const;
};

/// Finite-state transition matrix with state labels. Construct through
/// make_kernel so the stochasticity invariants hold for every live instance.
struct MarkovKernel {
  std::vector<std::string> states;
  Matrix matrix;

  std::size_t size() const noexcept { return states.size(); }
  std::optional<std::size_t> state_index(const std::string& label) const;
};

/// Per-state observable f(x); values aligned with the kernel's state list.
struct ObservedFunction {
  std::vector<double> values;
};

/// Validates and builds a kernel. Rows whose sums deviate from 1 by at most
/// 1e-12 are renormalized; larger deviations raise NonStochastic. Entries
/// below -1e-12 raise NegativeEntry, shape mismatches ShapeMismatch.
MarkovKernel make_kernel(std::vector<std::string> states,
                         Matrix matrix);

/// Validates a probability vector (entries in [0,1], sum within 1e-12 of 1).
Distribution make_distribution(std::vector<std::string> states,
                               std::vector<double> weights);

struct StationaryOptions {
  double tol = 1e-13;         // successive-iterate inf-norm threshold
  long max_iterations = 1000000;
};

/// Unique stationary distribution of the kernel, by power iteration on the
/// transpose of the lazy chain (P+I)/2. Raises NonUniqueStationary when
/// eigenvalue 1 of P has numerical multiplicity above 1, NoConvergence when
/// the iteration budget runs out. The residual ||piP - pi||_inf is at most
/// 1e-10 on success.
Distribution stationary_distribution(const MarkovKernel& kernel,
                                     const StationaryOptions& opts = {});

/// Time reversal P*(x,y) = pi(y) P(y,x) / pi(x). States with pi(x) = 0 raise
/// ZeroStationaryMass.
MarkovKernel time_reversal(const MarkovKernel& kernel, const Distribution& pi);

/// Detailed balance check: max |pi(x)P(x,y) - pi(y)P(y,x)| <= tol.
bool is_reversible(const MarkovKernel& kernel, const Distribution& pi,
                   double tol = 1e-10);

struct PairChain {
  MarkovKernel kernel;       // over ordered state pairs (x,y)
  Distribution stationary;   // pi(x) P(x,y)
};

/// Lift to the chain of consecutive pairs Y_i = (X_i, X_{i+1}).
PairChain pair_chain(const MarkovKernel& kernel);

/// The multiplicative reversiblization power (P*)^k P^k; self-adjoint in the
/// pi-weighted inner product and positive semidefinite.
Matrix reversiblization_matrix(const MarkovKernel& kernel,
                               const Distribution& pi, unsigned k);

/// N_q = sum_x q(x)^2 / pi(x); +infinity when q puts mass where pi does not.
double chi_square_nq(const Distribution& q, const Distribution& pi);

}  // namespace markov
