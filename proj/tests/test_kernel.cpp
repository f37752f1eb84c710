#include <cmath>
#include <limits>

#include "doctest.h"
#include "helpers.hpp"
#include "markov/kernel.hpp"
#include "markov/spectral.hpp"

using namespace markov;
using namespace markov::testing;

namespace {

Matrix from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("kernel construction validates stochasticity") {
  CHECK_NOTHROW(fair_coin());
  CHECK_NOTHROW(make_kernel({"a"}, from_rows({{1.0}})));

  try {
    make_kernel({"a", "b"}, from_rows({{0.5, 0.6}, {0.5, 0.5}}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonStochastic);
  }
  try {
    make_kernel({"a", "b"}, from_rows({{1.5, -0.5}, {0.5, 0.5}}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeEntry);
  }
  try {
    make_kernel({"a", "b"}, from_rows({{1.0}}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
}

TEST_CASE("stationary distribution") {
  const MarkovKernel p1 = biased_coin();
  const Distribution pi = stationary_distribution(p1);
  CHECK(pi.weights[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(pi.weights[1] == doctest::Approx(0.5).epsilon(1e-10));

  // pair chain of the biased coin
  const PairChain q1 = pair_chain(p1);
  const Distribution pi_q1 = stationary_distribution(q1.kernel);
  const std::vector<double> want = {0.3, 0.2, 0.2, 0.3};
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(std::abs(pi_q1.weights[i] - want[i]) < 1e-10);

  // periodic chains are fine thanks to the lazy iteration
  const Distribution pi_flip = stationary_distribution(flip_chain());
  CHECK(pi_flip.weights[0] == doctest::Approx(0.5).epsilon(1e-10));

  try {
    stationary_distribution(make_kernel({"a", "b"}, Matrix::identity(2)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUniqueStationary);
  }
}

TEST_CASE("time reversal") {
  const MarkovKernel p = biased_coin();
  const Distribution pi = stationary_distribution(p);
  const MarkovKernel rev = time_reversal(p, pi);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(rev.matrix(i, j) == doctest::Approx(p.matrix(i, j)).epsilon(1e-12));

  // involution and stationarity of pi for the reversal, on a non-reversible chain
  const PairChain q0 = pair_chain(fair_coin());
  const Distribution pi_q0 = stationary_distribution(q0.kernel);
  const MarkovKernel q0_star = time_reversal(q0.kernel, pi_q0);
  const Matrix expected_q0_star = from_rows({{0.5, 0, 0.5, 0},
                                             {0.5, 0, 0.5, 0},
                                             {0, 0.5, 0, 0.5},
                                             {0, 0.5, 0, 0.5}});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(std::abs(q0_star.matrix(i, j) - expected_q0_star(i, j)) < 1e-12);

  const MarkovKernel back = time_reversal(q0_star, pi_q0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(std::abs(back.matrix(i, j) - q0.kernel.matrix(i, j)) < 1e-12);

  const PairChain q1 = pair_chain(biased_coin());
  const MarkovKernel q1_star = time_reversal(q1.kernel, q1.stationary);
  const Matrix expected_q1_star = from_rows({{0.6, 0, 0.4, 0},
                                             {0.6, 0, 0.4, 0},
                                             {0, 0.4, 0, 0.6},
                                             {0, 0.4, 0, 0.6}});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(std::abs(q1_star.matrix(i, j) - expected_q1_star(i, j)) < 1e-10);

  // pi stationary for the reversal
  std::vector<double> pi_rev(4, 0.0);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      pi_rev[y] += pi_q0.weights[x] * q0_star.matrix(x, y);
  for (std::size_t y = 0; y < 4; ++y)
    CHECK(std::abs(pi_rev[y] - pi_q0.weights[y]) < 1e-12);
}

TEST_CASE("reversibility check") {
  const MarkovKernel p = biased_coin();
  CHECK(is_reversible(p, stationary_distribution(p)));

  const MarkovKernel flip = flip_chain();
  CHECK(is_reversible(flip, stationary_distribution(flip)));

  const PairChain q0 = pair_chain(fair_coin());
  CHECK_FALSE(is_reversible(q0.kernel, q0.stationary));
}

TEST_CASE("pair chain structure") {
  const PairChain q0 = pair_chain(fair_coin());
  const Matrix expected = from_rows({{0.5, 0.5, 0, 0},
                                     {0, 0, 0.5, 0.5},
                                     {0.5, 0.5, 0, 0},
                                     {0, 0, 0.5, 0.5}});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(std::abs(q0.kernel.matrix(i, j) - expected(i, j)) < 1e-12);
  CHECK(q0.kernel.states == std::vector<std::string>{"00", "01", "10", "11"});

  const PairChain q1 = pair_chain(biased_coin());
  const Matrix expected1 = from_rows({{0.6, 0.4, 0, 0},
                                      {0, 0, 0.4, 0.6},
                                      {0.6, 0.4, 0, 0},
                                      {0, 0, 0.4, 0.6}});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(std::abs(q1.kernel.matrix(i, j) - expected1(i, j)) < 1e-12);
  const std::vector<double> want = {0.3, 0.2, 0.2, 0.3};
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(std::abs(q1.stationary.weights[i] - want[i]) < 1e-12);

  const PairChain single = pair_chain(make_kernel({"a"}, Matrix::identity(1)));
  CHECK(single.kernel.size() == 1);
  CHECK(single.kernel.matrix(0, 0) == 1.0);

  // pair stationary marginalizes to pi on both coordinates
  const MarkovKernel p = random_kernel(3, 17);
  const Distribution pi = stationary_distribution(p);
  const PairChain q = pair_chain(p);
  for (std::size_t x = 0; x < 3; ++x) {
    double first = 0.0;
    double second = 0.0;
    for (std::size_t y = 0; y < 3; ++y) {
      first += q.stationary.weights[x * 3 + y];
      second += q.stationary.weights[y * 3 + x];
    }
    CHECK(std::abs(first - pi.weights[x]) < 1e-9);
    CHECK(std::abs(second - pi.weights[x]) < 1e-9);
  }
}

TEST_CASE("reversiblization matrix") {
  const MarkovKernel p = biased_coin();
  const Distribution pi = stationary_distribution(p);
  const Matrix m1 = reversiblization_matrix(p, pi, 1);
  const Matrix p2 = p.matrix * p.matrix;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(std::abs(m1(i, j) - p2(i, j)) < 1e-12);

  // PSD contraction: all pi-spectrum in [0, 1]
  const MarkovKernel r = random_kernel(4, 5);
  const Distribution pir = stationary_distribution(r);
  for (unsigned k : {1u, 2u, 3u}) {
    const auto eig = eigenvalues_self_adjoint(reversiblization_matrix(r, pir, k), pir);
    for (double l : eig) {
      CHECK(l >= -1e-10);
      CHECK(l <= 1.0 + 1e-10);
    }
  }
}

TEST_CASE("chi-square divergence") {
  const Distribution pi = make_distribution({"a", "b"}, {0.25, 0.75});
  CHECK(chi_square_nq(make_distribution({"a", "b"}, {1.0, 0.0}), pi) ==
        doctest::Approx(4.0));
  CHECK(chi_square_nq(pi, pi) == doctest::Approx(1.0));
  CHECK(chi_square_nq(make_distribution({"a", "b"}, {0.5, 0.5}), pi) ==
        doctest::Approx(4.0 / 3.0));

  // off-support mass is infinite
  const Distribution degenerate{{"a", "b"}, {1.0, 0.0}};
  CHECK(std::isinf(
      chi_square_nq(make_distribution({"a", "b"}, {0.5, 0.5}), degenerate)));

  // N_q >= 1 with equality only at q = pi
  CounterRng rng(CounterRng::stream(99, 0));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> q(3), p(3);
    double qs = 0.0, ps = 0.0;
    for (int i = 0; i < 3; ++i) {
      q[i] = rng.next_double() + 0.01;
      p[i] = rng.next_double() + 0.01;
      qs += q[i];
      ps += p[i];
    }
    for (int i = 0; i < 3; ++i) {
      q[i] /= qs;
      p[i] /= ps;
    }
    CHECK(chi_square_nq(Distribution{labels(3), q}, Distribution{labels(3), p}) >=
          1.0 - 1e-12);
  }
}
