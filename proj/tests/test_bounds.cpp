#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "markov/bounds.hpp"

using namespace markov;
using namespace markov::testing;

TEST_CASE("variance report") {
  const MarkovKernel r1 = rank_one({0.5, 0.5});
  const Distribution uniform = stationary_distribution(r1);
  const ObservedFunction pm{{1.0, -1.0}};  // V_f = 1
  const VarianceReport rep = variance_report(r1, uniform, pm, 10);
  CHECK(rep.v_f == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.exact == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(*rep.bound_rev == doctest::Approx(20.0).epsilon(1e-10));

  const MarkovKernel p1 = biased_coin();
  const ObservedFunction ind{{1.0, 0.0}};
  const VarianceReport rep1 = variance_report(p1, uniform, ind, 2);
  CHECK(rep1.exact == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(*rep1.bound_rev == doctest::Approx(1.25).epsilon(1e-10));
  CHECK(rep1.exact <= *rep1.bound_rev + 1e-9);
  CHECK(std::abs(rep1.exact - 2.0 * rep1.sigma_as2) <=
        4.0 * rep1.v_f / (0.8 * 0.8) + 1e-9);

  const ObservedFunction constant{{2.0, 2.0}};
  const VarianceReport repc = variance_report(p1, uniform, constant, 5);
  CHECK(repc.exact == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(repc.v_f == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("Bernstein tails") {
  BernsteinSpec rev;
  rev.variant = BernsteinVariant::Rev;
  rev.n = 100;
  rev.variance = 0.25;
  rev.c = 0.5;
  rev.gamma = 0.8;
  const TailBound b = bernstein_tail(rev, 20.0);
  CHECK(b.exponent == doctest::Approx(1.6).epsilon(1e-12));
  CHECK(b.probability == doctest::Approx(2.0 * std::exp(-1.6)).epsilon(1e-12));
  CHECK_FALSE(b.clamped);

  const TailBound at_zero = bernstein_tail(rev, 0.0);
  CHECK(at_zero.probability == 1.0);
  CHECK(at_zero.clamped);

  // one-sided drops the factor 2
  rev.one_sided = true;
  CHECK(bernstein_tail(rev, 20.0).probability ==
        doctest::Approx(std::exp(-1.6)).epsilon(1e-12));
  rev.one_sided = false;

  // monotone non-increasing in t
  double prev = 2.0;
  for (double t = 0.0; t <= 50.0; t += 2.5) {
    const double p = bernstein_tail(rev, t).probability;
    CHECK(p <= prev + 1e-15);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    prev = p;
  }

  // uniform residue variances collapse NonRevGeneral to the M = k_ps form
  BernsteinSpec nrg;
  nrg.variant = BernsteinVariant::NonRevGeneral;
  nrg.n = 100;
  nrg.variance = 25.0;  // V_{S'}
  nrg.c = 0.5;
  nrg.gamma_ps = 0.5;
  nrg.k_ps = 2;
  nrg.v_i = std::vector<double>{12.5, 12.5};
  const TailBound bn = bernstein_tail(nrg, 20.0);
  const double expected_expo =
      400.0 * 0.5 / (8.0 * 25.0 + 20.0 * 20.0 * 0.5 * 2.0 / 2.0);
  CHECK(bn.exponent == doctest::Approx(expected_expo).epsilon(1e-12));

  // missing fields are reported
  BernsteinSpec incomplete;
  incomplete.variant = BernsteinVariant::RevSigma;
  CHECK_THROWS_AS(bernstein_tail(incomplete, 1.0), Error);
}

TEST_CASE("residue machinery") {
  CHECK(residue_ratio_m({1.0, 1.0, 1.0}) == doctest::Approx(3.0));
  CHECK(residue_ratio_m({4.0, 1.0}) == doctest::Approx(3.0));

  // counts of indices i + j k_ps <= n
  const auto v = residue_variances(2.0, 10, 3);
  CHECK(v.size() == 3);
  CHECK(v[0] == doctest::Approx(2.0 * 4));  // 1,4,7,10
  CHECK(v[1] == doctest::Approx(2.0 * 3));  // 2,5,8
  CHECK(v[2] == doctest::Approx(2.0 * 3));  // 3,6,9

  // M >= k_ps always
  CHECK(residue_ratio_m(v) >= 3.0 - 1e-12);
}

TEST_CASE("non-stationary corrections") {
  CHECK(nonstationary_adjust(0.01, NonstationaryMethod::Sqrt, 4.0) ==
        doctest::Approx(0.2).epsilon(1e-12));
  CHECK(nonstationary_adjust(0.01, NonstationaryMethod::Sqrt, 1.0) ==
        doctest::Approx(0.1).epsilon(1e-12));
  CHECK(nonstationary_adjust(0.01, NonstationaryMethod::Additive, 0.05) ==
        doctest::Approx(0.06).epsilon(1e-12));
  CHECK(nonstationary_adjust(0.9, NonstationaryMethod::Additive, 0.5) == 1.0);
}

TEST_CASE("chi-square decay under burn-in") {
  const NqDecayResult rev = nq_decay(2.0, 5.0, 0.8, true);
  CHECK(rev.bound == doctest::Approx(1.0 + std::pow(0.2, 10)).epsilon(1e-12));
  CHECK_FALSE(rev.clamped);

  CHECK(nq_decay(1.0, 3.0, 0.5, true).bound == doctest::Approx(1.0));
  CHECK(nq_decay(1.0, 3.0, 0.5, false).bound == doctest::Approx(1.0));

  const NqDecayResult clamped = nq_decay(4.0, 0.5, 0.5, false);  // t0 < 1/gamma_ps
  CHECK(clamped.bound == doctest::Approx(4.0));
  CHECK(clamped.clamped);
}

TEST_CASE("truncation") {
  CHECK(clip(3.0, -1.0, 1.0) == 1.0);
  CHECK(clip(-2.0, -1.0, 1.0) == -1.0);
  CHECK(clip(0.3, -1.0, 1.0) == 0.3);

  const MarkovKernel p1 = biased_coin();
  const Distribution pi = stationary_distribution(p1);
  const TailEvaluator inner = [](const MarkovKernel& kernel, const Distribution& d,
                                 const ObservedFunction& f, unsigned n, double t) {
    BernsteinSpec spec;
    spec.variant = BernsteinVariant::Rev;
    spec.n = n;
    spec.variance = stationary_variance(d, f);
    double mean = 0.0;
    for (std::size_t x = 0; x < d.size(); ++x) mean += d.weights[x] * f.values[x];
    for (std::size_t x = 0; x < d.size(); ++x)
      spec.c = std::max(spec.c, std::abs(f.values[x] - mean));
    spec.gamma = 0.8;
    return bernstein_tail(spec, t).probability;
  };

  // f already inside [a,b]: no correction, equals the inner bound
  const ObservedFunction f{{1.0, 0.0}};
  const TailBound same = truncated_tail_bound(p1, pi, f, -2.0, 2.0, 50, 10.0, inner);
  CHECK(same.probability ==
        doctest::Approx(inner(p1, pi, f, 50, 10.0)).epsilon(1e-12));

  // pi(f >= b) = 0.5 at n = 10 swamps the bound
  const TailBound swamped = truncated_tail_bound(p1, pi, f, -2.0, 1.0, 10, 5.0, inner);
  CHECK(swamped.probability == 1.0);
  CHECK(swamped.clamped);
}

TEST_CASE("Markov McDiarmid tail") {
  const std::vector<double> c(100, 0.01);
  const TailBound b = mcdiarmid_markov_tail(c, 1.5625, 0.5);
  CHECK(b.exponent == doctest::Approx(8.0).epsilon(1e-10));
  CHECK(b.probability == doctest::Approx(2.0 * std::exp(-8.0)).epsilon(1e-10));

  CHECK(mcdiarmid_markov_tail(c, 1.5625, 0.0).probability == 1.0);

  try {
    mcdiarmid_markov_tail(std::vector<double>(5, 0.0), 1.0, 0.5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroNorm);
  }
}

TEST_CASE("mean empirical TV bound") {
  const Distribution uniform = make_distribution({"a", "b"}, {0.5, 0.5});
  CHECK(empirical_tv_mean_bound(uniform, 200, 0.8, true) ==
        doctest::Approx(std::sqrt(4.0 / 160.0)).epsilon(1e-12));

  // decreases to zero in n
  double prev = 2.0;
  for (unsigned n : {10u, 100u, 1000u, 10000u}) {
    const double b = empirical_tv_mean_bound(uniform, n, 0.8, true);
    CHECK(b < prev);
    prev = b;
  }

  const Distribution point{{"a"}, {1.0}};
  CHECK(empirical_tv_mean_bound(point, 10, 1.0, true) <= 1.0);
}
