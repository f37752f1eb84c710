#include "markov/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace markov {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonStochastic: return "NonStochastic";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonUniqueStationary: return "NonUniqueStationary";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ZeroStationaryMass: return "ZeroStationaryMass";
    case ErrorCode::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorCode::NotReversible: return "NotReversible";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::SingularResolvent: return "SingularResolvent";
    case ErrorCode::TMaxTooSmall: return "TMaxTooSmall";
    case ErrorCode::NoFiniteTau: return "NoFiniteTau";
    case ErrorCode::ZeroGap: return "ZeroGap";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::NonPositiveGap: return "NonPositiveGap";
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::ZeroTransitionProbability: return "ZeroTransitionProbability";
    case ErrorCode::ThresholdOutOfRange: return "ThresholdOutOfRange";
    case ErrorCode::UnknownState: return "UnknownState";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw Error(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

std::vector<double> Matrix::operator*(const std::vector<double>& v) const {
  if (cols_ != v.size())
    throw Error(ErrorCode::ShapeMismatch, "matrix-vector shape mismatch");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix Matrix::power(unsigned k) const {
  Matrix out = Matrix::identity(rows_);
  for (unsigned i = 0; i < k; ++i) out = out * (*this);
  return out;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double Matrix::inf_norm() const {
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
    m = std::max(m, s);
  }
  return m;
}

std::vector<double> jacobi_eigenvalues(Matrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols())
    throw Error(ErrorCode::ShapeMismatch, "jacobi_eigenvalues needs a square matrix");
  constexpr int kMaxSweeps = 100;
  constexpr double kOffTol = 1e-13;

  auto off_frobenius = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * m(i, j) * m(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_frobenius() > kOffTol) {
    if (++sweep > kMaxSweeps)
      throw Error(ErrorCode::NoConvergence, "jacobi eigensolver did not converge");
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = m(k, p);
          const double akq = m(k, q);
          m(k, p) = c * akp - s * akq;
          m(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = m(p, k);
          const double aqk = m(q, k);
          m(p, k) = c * apk - s * aqk;
          m(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = m(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

std::vector<double> solve_dense(Matrix a, std::vector<double> b) {
  const std::size_t n = a.rows();
  if (n != a.cols() || n != b.size())
    throw Error(ErrorCode::ShapeMismatch, "solve_dense shape mismatch");
  const double pivot_floor = 1e-12 * a.inf_norm();

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) < pivot_floor)
      throw Error(ErrorCode::SingularResolvent, "numerically singular system");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / a(col, col);
      if (factor == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

std::size_t nullity(Matrix a, double tol) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  const double pivot_floor = tol * std::max(a.inf_norm(), 1e-300);
  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t piv = row;
    for (std::size_t r = row + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) < pivot_floor) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m; ++j) std::swap(a(piv, j), a(row, j));
    for (std::size_t r = row + 1; r < n; ++r) {
      const double factor = a(r, col) / a(row, col);
      if (factor == 0.0) continue;
      for (std::size_t j = col; j < m; ++j) a(r, j) -= factor * a(row, j);
    }
    ++rank;
    ++row;
  }
  return m - rank;
}

double operator_norm(const Matrix& a) {
  const Matrix ata = a.transpose() * a;
  const std::size_t n = ata.rows();
  if (n == 0) return 0.0;
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double lambda = 0.0;
  constexpr int kMaxIter = 200000;
  for (int it = 0; it < kMaxIter; ++it) {
    std::vector<double> w = ata * v;
    double norm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
    if (norm == 0.0) return 0.0;
    for (double& x : w) x /= norm;
    const double lambda_new =
        std::inner_product(w.begin(), w.end(), (ata * w).begin(), 0.0);
    v = std::move(w);
    if (std::abs(lambda_new - lambda) <= 1e-12 * std::max(std::abs(lambda_new), 1.0))
      return std::sqrt(std::max(lambda_new, 0.0));
    lambda = lambda_new;
  }
  throw Error(ErrorCode::NoConvergence, "operator norm power iteration did not converge");
}

}  // namespace markov
