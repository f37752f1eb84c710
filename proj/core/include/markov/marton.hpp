#pragma once

#include <vector>

#include "markov/bounds.hpp"
#include "markov/kernel.hpp"

namespace markov {

/// Upper-triangular coupling matrix with unit diagonal, entries in [0,1].
struct MixingMatrix {
  Matrix entries;
  std::size_t dim() const noexcept { return entries.rows(); }
};

/// Contiguous index blocks covering 1..N (stored 0-based as [begin, end)).
struct Partition {
  struct Block {
    std::size_t begin;
    std::size_t end;
    std::size_t size() const noexcept { return end - begin; }
  };
  std::vector<Block> blocks;
  std::size_t max_block_size() const;
};

/// ceil(N / block_size) blocks of block_size, last one possibly shorter.
Partition block_partition(std::size_t n, std::size_t block_size);

/// Per-block sums C_i(c) = sum of c_j over block i.
std::vector<double> block_weights(const std::vector<double>& c,
                                  const Partition& partition);

/// The coupling matrix for mixing-time blocks: each row reads
/// 1, 1, eps, eps, eps^2, eps^2, ... rightward from the diagonal.
MixingMatrix markov_mixing_matrix(std::size_t n_blocks, double eps);

/// Bidiagonal ones, the m-dependent case.
MixingMatrix mdep_mixing_matrix(std::size_t n_blocks);

/// Largest singular value of the coupling matrix.
double operator_norm(const MixingMatrix& gamma);

/// 2 exp(-2 t^2 / ||Gamma C(c)||^2), clamped to [0,1]. A zero weight vector
/// gives tail 0 for t > 0 and 1 at t = 0.
TailBound mcdiarmid_general_tail(const MixingMatrix& gamma,
                                 const std::vector<double>& cc, double t);

/// Log moment generating function bound lambda^2 ||Gamma C(c)||^2 / 8.
double mgf_log_bound(const MixingMatrix& gamma, const std::vector<double>& cc,
                     double lambda);

/// a = max_{x,y} TV(P(x,.), P(y,.)); equals dbar(1).
double one_step_contraction(const MarkovKernel& kernel);

}  // namespace markov
