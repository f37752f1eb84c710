#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace markov {

/// Error codes shared across the toolkit. Every thrown Error carries one.
enum class ErrorCode {
  NonStochastic,
  NegativeEntry,
  ShapeMismatch,
  NonUniqueStationary,
  NoConvergence,
  ZeroStationaryMass,
  NotSelfAdjoint,
  NotReversible,
  SearchExhausted,
  SingularResolvent,
  TMaxTooSmall,
  NoFiniteTau,
  ZeroGap,
  MissingField,
  NonPositiveGap,
  ZeroNorm,
  ZeroTransitionProbability,
  ThresholdOutOfRange,
  UnknownState,
  TooShort,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code) noexcept;

/// Dense row-major matrix of doubles. Small and value-semantic; the chains
/// handled here have at most a few hundred states.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  std::vector<double> operator*(const std::vector<double>& v) const;

  /// Power by repeated multiplication; k = 0 gives the identity.
  Matrix power(unsigned k) const;

  double max_abs() const;
  /// Maximum absolute row sum.
  double inf_norm() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted in
/// descending order. Off-diagonal Frobenius threshold 1e-13, at most 100
/// sweeps; throws NoConvergence past that.
std::vector<double> jacobi_eigenvalues(Matrix m);

/// Solves a x = b by Gaussian elimination with partial pivoting. Throws
/// SingularResolvent when a pivot drops below 1e-12 * ||a||_inf.
std::vector<double> solve_dense(Matrix a, std::vector<double> b);

/// Dimension of the kernel of a, with rank determined by Gaussian elimination
/// at pivot threshold tol * ||a||_inf.
std::size_t nullity(Matrix a, double tol = 1e-9);

/// Largest singular value via power iteration on a^T a, relative tolerance
/// 1e-12, all-ones start vector.
double operator_norm(const Matrix& a);

}  // namespace markov
