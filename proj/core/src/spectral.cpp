#include "markov/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace markov {

namespace {

constexpr double kMultiplicityTol = 1e-9;  // second eigenvalue >= 1 - this => gap 0

std::vector<double> centered(const Distribution& pi, const ObservedFunction& f) {
  if (f.values.size() != pi.size())
    throw Error(ErrorCode::ShapeMismatch, "observable does not match state count");
  double mean = 0.0;
  for (std::size_t x = 0; x < pi.size(); ++x) mean += pi.weights[x] * f.values[x];
  std::vector<double> out(f.values);
  for (double& v : out) v -= mean;
  return out;
}

double pi_inner(const Distribution& pi, const std::vector<double>& a,
                const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t x = 0; x < pi.size(); ++x) s += pi.weights[x] * a[x] * b[x];
  return s;
}

// (P - Pi) v with Pi the rank-one projection onto pi.
std::vector<double> apply_p_minus_proj(const MarkovKernel& kernel,
                                       const Distribution& pi,
                                       const std::vector<double>& v) {
  const std::size_t n = pi.size();
  double mean = 0.0;
  for (std::size_t x = 0; x < n; ++x) mean += pi.weights[x] * v[x];
  std::vector<double> out = kernel.matrix * v;
  for (double& o : out) o -= mean;
  return out;
}

}  // namespace

std::vector<double> eigenvalues_self_adjoint(const Matrix& m,
                                             const Distribution& pi) {
  const std::size_t n = pi.size();
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorCode::ShapeMismatch, "matrix does not match state count");
  for (std::size_t x = 0; x < n; ++x)
    if (pi.weights[x] <= 0.0)
      throw Error(ErrorCode::ZeroStationaryMass,
                  "pi-weighted geometry needs pi > 0 everywhere");

  Matrix sym(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sym(i, j) = std::sqrt(pi.weights[i] / pi.weights[j]) * m(i, j);

  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      defect = std::max(defect, std::abs(sym(i, j) - sym(j, i)));
  if (defect > 1e-10)
    throw Error(ErrorCode::NotSelfAdjoint,
                "matrix is not self-adjoint in the pi inner product");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (sym(i, j) + sym(j, i));
      sym(i, j) = sym(j, i) = avg;
    }
  return jacobi_eigenvalues(std::move(sym));
}

double spectral_gap(const MarkovKernel& kernel, const Distribution& pi) {
  if (!is_reversible(kernel, pi))
    throw Error(ErrorCode::NotReversible, "spectral_gap needs a reversible kernel");
  const std::vector<double> eig = eigenvalues_self_adjoint(kernel.matrix, pi);
  if (eig.size() == 1) return 1.0;  // single state: spectrum {1}
  if (eig[1] >= 1.0 - kMultiplicityTol) return 0.0;
  return 1.0 - eig[1];
}

double absolute_spectral_gap(const MarkovKernel& kernel, const Distribution& pi) {
  if (!is_reversible(kernel, pi))
    throw Error(ErrorCode::NotReversible,
                "absolute_spectral_gap needs a reversible kernel");
  const std::vector<double> eig = eigenvalues_self_adjoint(kernel.matrix, pi);
  if (eig.size() == 1) return 1.0;
  if (eig[1] >= 1.0 - kMultiplicityTol) return 0.0;
  double top = 0.0;
  for (std::size_t i = 1; i < eig.size(); ++i) top = std::max(top, std::abs(eig[i]));
  return 1.0 - top;
}

PseudoGapResult pseudo_spectral_gap(const MarkovKernel& kernel,
                                    const Distribution& pi, unsigned k_max) {
  PseudoGapResult result;
  for (unsigned k = 1; k <= k_max; ++k) {
    const Matrix mk = reversiblization_matrix(kernel, pi, k);
    std::vector<double> eig = eigenvalues_self_adjoint(mk, pi);
    double gap;
    if (eig.size() == 1) {
      gap = 1.0;
    } else if (eig[1] >= 1.0 - kMultiplicityTol) {
      gap = 0.0;
    } else {
      gap = 1.0 - eig[1];
    }
    result.eigenvalues_by_k[k] = std::move(eig);
    if (gap / k > result.gamma_ps) {
      result.gamma_ps = gap / k;
      result.k_ps = k;
    }
    // gamma((P*)^j P^j) <= 1, so contributions from j > k are below 1/(k+1).
    if (1.0 / (k + 1) <= result.gamma_ps) return result;
  }
  if (result.gamma_ps == 0.0) result.exhausted = true;
  return result;
}

SpectralReport spectral_report(const MarkovKernel& kernel,
                               const Distribution& pi, unsigned k_max) {
  SpectralReport report;
  report.reversible = is_reversible(kernel, pi);
  if (report.reversible) {
    report.gamma = spectral_gap(kernel, pi);
    report.gamma_star = absolute_spectral_gap(kernel, pi);
  }
  PseudoGapResult ps = pseudo_spectral_gap(kernel, pi, k_max);
  report.gamma_ps = ps.gamma_ps;
  report.k_ps = ps.k_ps;
  report.eigenvalues_by_k = std::move(ps.eigenvalues_by_k);
  report.exhausted = ps.exhausted;
  return report;
}

double stationary_variance(const Distribution& pi, const ObservedFunction& f) {
  const std::vector<double> fc = centered(pi, f);
  return pi_inner(pi, fc, fc);
}

double asymptotic_variance(const MarkovKernel& kernel, const Distribution& pi,
                           const ObservedFunction& f) {
  const std::size_t n = pi.size();
  const std::vector<double> fc = centered(pi, f);
  // A = I - (P - Pi), Pi the rank-one projection with rows pi.
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = (i == j ? 1.0 : 0.0) - kernel.matrix(i, j) + pi.weights[j];
  const std::vector<double> sol = solve_dense(std::move(a), fc);
  const double sigma2 = 2.0 * pi_inner(pi, fc, sol) - pi_inner(pi, fc, fc);
  if (sigma2 < -1e-10)
    throw Error(ErrorCode::SingularResolvent,
                "asymptotic variance came out negative");
  return std::max(sigma2, 0.0);
}

double exact_sum_variance(const MarkovKernel& kernel, const Distribution& pi,
                          const ObservedFunction& f, unsigned n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  const std::vector<double> fc = centered(pi, f);
  double var = static_cast<double>(n) * pi_inner(pi, fc, fc);
  std::vector<double> g = fc;
  for (unsigned k = 1; k < n; ++k) {
    g = apply_p_minus_proj(kernel, pi, g);
    var += 2.0 * static_cast<double>(n - k) * pi_inner(pi, fc, g);
  }
  return var;
}

}  // namespace markov
