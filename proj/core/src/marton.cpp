#include "markov/marton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "markov/mixing.hpp"

namespace markov {

std::size_t Partition::max_block_size() const {
  std::size_t m = 0;
  for (const Block& b : blocks) m = std::max(m, b.size());
  return m;
}

Partition block_partition(std::size_t n, std::size_t block_size) {
  if (n < 1 || block_size < 1)
    throw Error(ErrorCode::InvalidArgument, "need n >= 1 and block_size >= 1");
  Partition p;
  for (std::size_t begin = 0; begin < n; begin += block_size)
    p.blocks.push_back({begin, std::min(begin + block_size, n)});
  return p;
}

std::vector<double> block_weights(const std::vector<double>& c,
                                  const Partition& partition) {
  if (partition.blocks.empty() || partition.blocks.back().end != c.size())
    throw Error(ErrorCode::ShapeMismatch, "partition does not cover the weight vector");
  std::vector<double> out;
  out.reserve(partition.blocks.size());
  for (const Partition::Block& b : partition.blocks) {
    double s = 0.0;
    for (std::size_t j = b.begin; j < b.end; ++j) s += c[j];
    out.push_back(s);
  }
  return out;
}

MixingMatrix markov_mixing_matrix(std::size_t n_blocks, double eps) {
  if (eps < 0.0 || eps >= 1.0)
    throw Error(ErrorCode::InvalidArgument, "eps must be in [0,1)");
  Matrix g(n_blocks, n_blocks);
  for (std::size_t i = 0; i < n_blocks; ++i) {
    for (std::size_t j = i; j < n_blocks; ++j) {
      const std::size_t d = j - i;
      g(i, j) = d <= 1 ? 1.0 : std::pow(eps, static_cast<double>(d / 2));
    }
  }
  return MixingMatrix{std::move(g)};
}

MixingMatrix mdep_mixing_matrix(std::size_t n_blocks) {
  Matrix g(n_blocks, n_blocks);
  for (std::size_t i = 0; i < n_blocks; ++i) {
    g(i, i) = 1.0;
    if (i + 1 < n_blocks) g(i, i + 1) = 1.0;
  }
  return MixingMatrix{std::move(g)};
}

double operator_norm(const MixingMatrix& gamma) {
  return operator_norm(gamma.entries);
}

namespace {
double weighted_norm_sq(const MixingMatrix& gamma, const std::vector<double>& cc) {
  const std::vector<double> v = gamma.entries * cc;
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}
}  // namespace

TailBound mcdiarmid_general_tail(const MixingMatrix& gamma,
                                 const std::vector<double>& cc, double t) {
  if (t < 0.0) throw Error(ErrorCode::InvalidArgument, "t must be non-negative");
  const double norm_sq = weighted_norm_sq(gamma, cc);
  TailBound out;
  if (norm_sq == 0.0) {
    out.probability = t > 0.0 ? 0.0 : 1.0;
    out.exponent = t > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    return out;
  }
  out.exponent = 2.0 * t * t / norm_sq;
  const double value = 2.0 * std::exp(-out.exponent);
  out.clamped = value > 1.0;
  out.probability = std::min(value, 1.0);
  return out;
}

double mgf_log_bound(const MixingMatrix& gamma, const std::vector<double>& cc,
                     double lambda) {
  return lambda * lambda * weighted_norm_sq(gamma, cc) / 8.0;
}

double one_step_contraction(const MarkovKernel& kernel) {
  const std::size_t n = kernel.size();
  double a = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      a = std::max(a, tv_distance(kernel.matrix.row(x), kernel.matrix.row(y)));
  return a;
}

}  // namespace markov
