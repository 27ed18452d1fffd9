#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "lrslab/errors.hpp"
#include "lrslab/factor.hpp"
#include "lrslab/primes.hpp"
#include "lrslab/sieve.hpp"

using namespace lrslab;

namespace {

void expect_entry(const SieveTable& t, std::uint64_t n) {
  const auto o = oracle::arith(n);
  const std::size_t i = t.index(n);
  EXPECT_EQ(t.phi[i], o.phi) << n;
  EXPECT_EQ(t.sigma[i], o.sigma) << n;
  EXPECT_EQ(t.big_omega[i], o.omega) << n;
  EXPECT_EQ(t.tau[i], o.tau) << n;
  EXPECT_EQ(t.spf[i], o.spf) << n;
}

}  // namespace

TEST(Sieve, Twelve) {
  const SieveTable t = sieve_range(1, 13);
  const std::size_t i = t.index(12);
  EXPECT_EQ(t.phi[i], 4u);
  EXPECT_EQ(t.sigma[i], 28u);
  EXPECT_EQ(t.big_omega[i], 3);
  EXPECT_EQ(t.tau[i], 6);
  EXPECT_EQ(t.spf[i], 2u);
}

TEST(Sieve, OneFollowsEmptyProductConventions) {
  const SieveTable t = sieve_range(1, 2);
  EXPECT_EQ(t.phi[0], 1u);
  EXPECT_EQ(t.sigma[0], 1u);
  EXPECT_EQ(t.big_omega[0], 0);
  EXPECT_EQ(t.tau[0], 1);
  EXPECT_EQ(t.spf[0], 1u);
}

TEST(Sieve, SinglePrime) {
  const SieveTable t = sieve_range(97, 98);
  EXPECT_EQ(t.phi[0], 96u);
  EXPECT_EQ(t.sigma[0], 98u);
  EXPECT_EQ(t.big_omega[0], 1);
  EXPECT_EQ(t.tau[0], 2);
  EXPECT_EQ(t.spf[0], 97u);
}

TEST(Sieve, FullSmallRangeMatchesOracle) {
  const SieveTable t = sieve_range(1, 20001);
  for (std::uint64_t n = 1; n <= 20000; ++n) expect_entry(t, n);
}

TEST(Sieve, PrimesInRange) {
  const SieveTable t = sieve_range(1000, 5000);
  for (std::uint64_t n = 1000; n < 5000; ++n) {
    if (!is_prime_u64(n)) continue;
    EXPECT_EQ(t.phi[t.index(n)], n - 1);
    EXPECT_EQ(t.sigma[t.index(n)], n + 1);
    EXPECT_EQ(t.tau[t.index(n)], 2);
    EXPECT_EQ(t.spf[t.index(n)], n);
  }
}

TEST(Sieve, HighRangesAgainstFactorEngine) {
  // Above 2^32 the kernel switches to 64-bit residues.
  std::mt19937_64 rng(3);
  for (std::uint64_t lo : {std::uint64_t{1} << 32, std::uint64_t{999'999'000'000}, (std::uint64_t{1} << 40) - 5000}) {
    const SieveTable t = sieve_range(lo, lo + 5000);
    for (int k = 0; k < 300; ++k) {
      const std::uint64_t n = lo + rng() % 5000;
      const FactorResult f = factor(from_u64(n), FactorBudget{});
      ASSERT_TRUE(f.exact());
      std::uint64_t phi = 1, sigma = 1, omega = 0, tau = 1;
      for (const auto& pp : f.factors) {
        const std::uint64_t p = to_u64(pp.prime);
        std::uint64_t pk = 1, s = 1;
        for (int e = 0; e < pp.exponent; ++e) {
          pk *= p;
          s += pk;
        }
        phi *= pk / p * (p - 1);
        sigma *= s;
        omega += static_cast<std::uint64_t>(pp.exponent);
        tau *= static_cast<std::uint64_t>(pp.exponent + 1);
      }
      const std::size_t i = t.index(n);
      EXPECT_EQ(t.phi[i], phi);
      EXPECT_EQ(t.sigma[i], sigma);
      EXPECT_EQ(t.big_omega[i], omega);
      EXPECT_EQ(t.tau[i], tau);
      EXPECT_EQ(t.spf[i], to_u64(f.factors.front().prime));
    }
  }
}

TEST(Sieve, Multiplicativity) {
  const SieveTable t = sieve_range(1, 200001);
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 1000) {
    const std::uint64_t m = 1 + rng() % 450, n = 1 + rng() % 450;
    if (gcd_u64(m, n) != 1) continue;
    EXPECT_EQ(t.phi[t.index(m * n)], t.phi[t.index(m)] * t.phi[t.index(n)]);
    EXPECT_EQ(t.sigma[t.index(m * n)], t.sigma[t.index(m)] * t.sigma[t.index(n)]);
    EXPECT_EQ(t.tau[t.index(m * n)], t.tau[t.index(m)] * t.tau[t.index(n)]);
    ++checked;
  }
}

TEST(Sieve, SegmentationAndThreadsDoNotChangeTables) {
  const SieveTable a = sieve_range(1, 300001);
  SieveConfig small;
  small.segment_size = 977;
  small.threads = 3;
  const SieveTable b = sieve_range(1, 300001, small);
  EXPECT_EQ(a.phi, b.phi);
  EXPECT_EQ(a.sigma, b.sigma);
  EXPECT_EQ(a.big_omega, b.big_omega);
  EXPECT_EQ(a.tau, b.tau);
  EXPECT_EQ(a.spf, b.spf);
}

TEST(Sieve, RangeChecks) {
  EXPECT_THROW(sieve_range(0, 10), ValidationError);
  EXPECT_THROW(sieve_range(10, 10), ValidationError);
  SieveConfig cap;
  cap.max_hi = 1000;
  EXPECT_THROW(sieve_range(1, 1001, cap), ResourceError);
  EXPECT_NO_THROW(sieve_range(1, 1000, cap));
}

TEST(Rough, KnownCounts) {
  EXPECT_EQ(count_rough(100, 10).count, 21u);
  EXPECT_EQ(count_rough(10, 2).count, 4u);
  EXPECT_EQ(count_rough(10, 10).count, 0u);
  EXPECT_THROW(count_rough(5, 10), ValidationError);
}

TEST(Rough, MatchesBruteForceAndIsMonotone) {
  for (std::uint64_t y : {2, 10, 100}) {
    std::uint64_t brute = 0;
    for (std::uint64_t n = 2; n <= 10000; ++n) brute += oracle::arith(n).spf > y;
    EXPECT_EQ(count_rough(10000, y).count, brute) << y;
  }
  std::uint64_t prev = UINT64_MAX;
  for (std::uint64_t y = 1; y <= 200; y += 7) {
    const auto c = count_rough(5000, y).count;
    EXPECT_LE(c, prev);
    prev = c;
  }
  prev = 0;
  for (std::uint64_t x = 50; x <= 5000; x += 450) {
    const auto c = count_rough(x, 30).count;
    EXPECT_GE(c, prev);
    prev = c;
  }
}

TEST(HighOmega, SmallBoundsAreEmpty) {
  EXPECT_EQ(count_high_omega(10).count, 0u);
  const auto r = count_high_omega(1'000'000);
  EXPECT_EQ(r.count, 0u);
  EXPECT_NEAR(r.threshold, 26.26, 0.01);
  EXPECT_NEAR(r.comparison, 1e6 / std::pow(std::log(1e6), 2), 1e-6);
}

TEST(HighOmega, HundredMillionWithSampledOracle) {
  const std::uint64_t x = 100'000'000;
  std::vector<std::uint64_t> sample;
  std::mt19937_64 rng(42);
  for (int i = 0; i < 10000; ++i) sample.push_back(1 + rng() % x);
  std::sort(sample.begin(), sample.end());
  std::uint64_t mismatches = 0, max_omega = 0;
  for_each_segment(1, x + 1, SieveConfig{}, [&](const SieveTable& t, std::size_t) {
    for (auto it = std::lower_bound(sample.begin(), sample.end(), t.lo);
         it != sample.end() && *it < t.hi; ++it) {
      mismatches += t.big_omega[t.index(*it)] != oracle::arith(*it).omega;
    }
    for (auto w : t.big_omega) max_omega = std::max<std::uint64_t>(max_omega, w);
  });
  EXPECT_EQ(mismatches, 0u);
  EXPECT_EQ(max_omega, 26u);  // 2^26 <= 10^8 < 2^27
  const auto r = count_high_omega(x);
  // 10 log log 10^8 = 29.1..., above the largest Omega.
  EXPECT_EQ(r.count, 0u);
}

TEST(TauSigma, BruteForceCounts) {
  EXPECT_EQ(count_tau_sigma_large(10).count, 2u);  // n = 6, 10
  EXPECT_EQ(count_tau_sigma_large(100).count, 45u);
  EXPECT_EQ(count_tau_sigma_large(10000).count, 6984u);
  EXPECT_EQ(count_tau_sigma_large(10000).undecided, 0u);
}

TEST(TauSigma, ExhaustedBudgetIsUndecided) {
  FactorBudget b;
  b.trial_bound = 2;
  b.rho_iterations = 0;
  const auto r = count_tau_sigma_large(1000, b);
  EXPECT_GT(r.undecided, 0u);
  EXPECT_LE(r.count + r.undecided, 1000u);
}

TEST(Schoenberg, Values) {
  EXPECT_EQ(schoenberg_cdf(10, Rational(1)).fraction(), 1);
  EXPECT_EQ(schoenberg_cdf(1000, Rational(1)).fraction(), 1);
  EXPECT_EQ(schoenberg_cdf(10, Rational(1, 2)).count, 5u);
  EXPECT_EQ(schoenberg_cdf(10, Rational(0)).count, 0u);
  EXPECT_THROW(schoenberg_cdf(10, Rational(3, 2)), ValidationError);
}

TEST(Schoenberg, MonotoneInAlphaAndTailOracle) {
  std::uint64_t prev = 0;
  for (int k = 0; k <= 40; ++k) {
    const auto c = schoenberg_cdf(5000, Rational(k, 40)).count;
    EXPECT_GE(c, prev);
    prev = c;
  }
  std::uint64_t brute = 0;
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    const auto p = oracle::phi(n);
    brute += 2 * p * p > n * n;
  }
  EXPECT_EQ(count_phi_ratio_above_inv_sqrt2(1000), brute);
  EXPECT_GT(count_phi_ratio_above_inv_sqrt2(1'000'000), 0u);
}

TEST(Extremal, ThirtyAndThree) {
  const ExtremalScan e = extremal_scan(30);
  // log log 3 is tiny, so n = 3 wins both scans up to 30.
  EXPECT_EQ(e.min_phi_n, 3u);
  EXPECT_EQ(e.max_sigma_n, 3u);
  EXPECT_NEAR(e.min_phi_ratio, 2.0 * std::log(std::log(3.0)) / 3.0, 1e-12);
  const ExtremalScan one = extremal_scan(3);
  EXPECT_EQ(one.min_phi_n, 3u);
  EXPECT_EQ(one.max_sigma_n, 3u);
  EXPECT_THROW(extremal_scan(2), ValidationError);
}

TEST(Extremal, AgreesWithBruteForce) {
  const std::uint64_t x = 3000;
  double best_phi = 1e9, best_sigma = -1;
  std::uint64_t at_phi = 0, at_sigma = 0;
  for (std::uint64_t n = 3; n <= x; ++n) {
    const auto o = oracle::arith(n);
    const double ll = std::log(std::log(static_cast<double>(n)));
    const double pr = static_cast<double>(o.phi) * ll / static_cast<double>(n);
    const double sr = static_cast<double>(o.sigma) / (static_cast<double>(n) * ll);
    if (pr < best_phi) best_phi = pr, at_phi = n;
    if (sr > best_sigma) best_sigma = sr, at_sigma = n;
  }
  SieveConfig cfg;
  cfg.segment_size = 100;
  const ExtremalScan e = extremal_scan(x, cfg);
  EXPECT_EQ(e.min_phi_n, at_phi);
  EXPECT_EQ(e.max_sigma_n, at_sigma);
}
