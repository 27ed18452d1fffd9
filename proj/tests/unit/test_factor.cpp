#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "lrslab/errors.hpp"
#include "lrslab/factor.hpp"
#include "lrslab/primes.hpp"

using namespace lrslab;

namespace {

FactorBudget tiny() {
  FactorBudget b;
  b.trial_bound = 50;
  b.rho_iterations = 0;
  return b;
}

bool inside(const PhiSigmaBounds& b, std::uint64_t phi, std::uint64_t sigma) {
  return b.phi_low <= Rational(from_u64(phi)) && Rational(from_u64(phi)) <= b.phi_high &&
         b.sigma_low <= Rational(from_u64(sigma)) && Rational(from_u64(sigma)) <= b.sigma_high;
}

}  // namespace

TEST(Primes, MillerRabinAgainstTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    bool naive = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && naive; ++d) naive = n % d != 0;
    ASSERT_EQ(is_prime_u64(n), naive) << n;
  }
  EXPECT_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));
  EXPECT_EQ(primality(BigInt("170141183460469231731687303715884105727"), 25), Primality::ProbablePrime);
  EXPECT_EQ(primality(BigInt("170141183460469231731687303715884105729"), 25), Primality::Composite);
}

TEST(Factor, FiftyFive) {
  const FactorResult f = factor(BigInt(55), FactorBudget{});
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, 5);
  EXPECT_EQ(f.factors[1].prime, 11);
  EXPECT_TRUE(f.exact());
  const PhiSigmaBounds b = phi_sigma_bounds(f);
  EXPECT_TRUE(b.exact);
  EXPECT_EQ(b.phi_low, 40);
  EXPECT_EQ(b.phi_high, 40);
  EXPECT_EQ(b.sigma_low, 72);
  EXPECT_EQ(b.sigma_high, 72);
}

TEST(Factor, One) {
  const FactorResult f = factor(BigInt(1), FactorBudget{});
  EXPECT_TRUE(f.factors.empty());
  EXPECT_TRUE(f.complete());
  EXPECT_EQ(tau_from_factors(f), BigInt(1));
  EXPECT_THROW(factor(BigInt(0), FactorBudget{}), ValidationError);
}

TEST(Factor, PrimeIsExact) {
  for (const char* p : {"97", "1000003", "2305843009213693951"}) {
    const BigInt m(p);
    const PhiSigmaBounds b = phi_sigma_bounds(factor(m, FactorBudget{}));
    EXPECT_TRUE(b.exact);
    EXPECT_EQ(b.phi_low, Rational(m - 1));
    EXPECT_EQ(b.sigma_high, Rational(m + 1));
  }
}

TEST(Factor, MersenneOneHundredOne) {
  BigInt m;
  mpz_ui_pow_ui(m.get_mpz_t(), 2, 101);
  m -= 1;
  // Both prime factors exceed 10^6, so trial division alone finds nothing.
  FactorBudget trial_only;
  trial_only.rho_iterations = 0;
  const FactorResult partial = factor(m, trial_only);
  EXPECT_TRUE(partial.factors.empty());
  EXPECT_EQ(partial.cofactor, m);
  EXPECT_EQ(partial.cofactor_status, CofactorStatus::Composite);
  EXPECT_FALSE(tau_from_factors(partial).has_value());

  const FactorResult full = factor(m, FactorBudget{});
  ASSERT_TRUE(full.complete());
  ASSERT_EQ(full.factors.size(), 2u);
  EXPECT_EQ(full.factors[0].prime, BigInt("7432339208719"));
  EXPECT_EQ(full.factors[1].prime, BigInt("341117531003194129"));
  EXPECT_EQ(full.reconstruct(), m);
}

TEST(Factor, LargeProbablePrimeIsFlagged) {
  const BigInt q("170141183460469231731687303715884105727");  // 2^127 - 1
  const FactorResult f = factor(q * 3, FactorBudget{});
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[1].certainty, Certainty::Probable);
  EXPECT_TRUE(f.uses_probable());
  EXPECT_FALSE(f.exact());
}

TEST(Factor, PerfectPowers) {
  const BigInt p("1000000007");
  const BigInt m = p * p * p * 12;
  const FactorResult f = factor(m, FactorBudget{});
  ASSERT_TRUE(f.complete());
  EXPECT_EQ(f.reconstruct(), m);
  EXPECT_EQ(f.factors.back().prime, p);
  EXPECT_EQ(f.factors.back().exponent, 3);
  EXPECT_EQ(tau_from_factors(f), BigInt(6 * 4));
}

TEST(Factor, TauOfTwelve) { EXPECT_EQ(tau_from_factors(factor(BigInt(12), FactorBudget{})), BigInt(6)); }

TEST(Factor, InvariantsOnRandomInputs) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    BigInt m = from_u64(rng() >> (rng() % 60)) * from_u64(1 + (rng() >> 40));
    if (m < 1) m = 1;
    const FactorBudget budget = (i % 2) ? tiny() : FactorBudget{};
    const FactorResult f = factor(m, budget);
    ASSERT_EQ(f.reconstruct(), m);
    for (const auto& pp : f.factors) {
      if (pp.prime <= budget.trial_bound) {
        EXPECT_EQ(pp.certainty, Certainty::Proven);
      }
    }
    if (!f.complete()) {
      EXPECT_GT(f.cofactor, 1);
      EXPECT_NE(primality(f.cofactor, 10), Primality::ProvenPrime);
      for (std::uint32_t p : primes_up_to(budget.trial_bound)) {
        EXPECT_EQ(mpz_divisible_ui_p(f.cofactor.get_mpz_t(), p), 0) << "p=" << p;
      }
    }
  }
}

TEST(Factor, DeterministicForFixedSeed) {
  BigInt m("1000000016000000063");  // 1000000007 * 1000000009
  FactorBudget b;
  b.seed = 5;
  const std::string a = format_factor_result(factor(m, b));
  EXPECT_EQ(a, format_factor_result(factor(m, b)));
  EXPECT_EQ(factor(m, b).factors.size(), 2u);
}

TEST(Bounds, PartialFactorizationFormula) {
  // m = 3 C with C = q r, 100 < q <= r: known prime 3, B = 100, C < 10^6 so t = 3.
  const auto primes = primes_up_to(10000);
  int checked = 0;
  for (std::uint32_t q : primes) {
    if (q <= 100) continue;
    for (std::uint32_t r : primes) {
      if (r < q) continue;
      const std::uint64_t c = std::uint64_t{q} * r;
      if (c >= 1'000'000) break;
      FactorResult f;
      f.m = from_u64(3 * c);
      f.factors.push_back({BigInt(3), 1, Certainty::Proven});
      f.cofactor = from_u64(c);
      f.cofactor_status = CofactorStatus::Composite;
      f.trial_bound = 100;
      const PhiSigmaBounds b = phi_sigma_bounds(f);
      const Rational high = Rational(f.m) * Rational(2, 3);
      EXPECT_EQ(b.phi_high, high);
      const int t = c <= 10'000 ? 2 : 3;
      Rational shrink = 1;
      for (int i = 0; i < t; ++i) shrink *= Rational(99, 100);
      EXPECT_EQ(b.phi_low, high * shrink);
      const auto exact = oracle::arith(3 * c);
      EXPECT_TRUE(inside(b, exact.phi, exact.sigma)) << "q=" << q << " r=" << r;
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Bounds, SoundUnderTinyBudgets) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000'000'000ULL);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t m = dist(rng);
    const PhiSigmaBounds b = phi_sigma_bounds(factor(from_u64(m), tiny()));
    ASSERT_TRUE(inside(b, euler_phi_u64(m), sigma_u64(m))) << m;
    EXPECT_GE(b.phi_low, 1);
    EXPECT_GE(b.sigma_high, Rational(from_u64(m)));
  }
}

TEST(Bounds, LargerBudgetNeverWidens) {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::uint64_t> dist(2, 1'000'000'000'000ULL);
  for (int i = 0; i < 500; ++i) {
    const BigInt m = from_u64(dist(rng)) * from_u64(dist(rng));
    FactorBudget small = tiny();
    FactorBudget mid;
    mid.trial_bound = 1000;
    mid.rho_iterations = 0;
    const FactorBudget big{};
    const PhiSigmaBounds a = phi_sigma_bounds(factor(m, small));
    const PhiSigmaBounds b = phi_sigma_bounds(factor(m, mid));
    const PhiSigmaBounds c = phi_sigma_bounds(factor(m, big));
    EXPECT_LE(a.phi_low, b.phi_low);
    EXPECT_GE(a.phi_high, b.phi_high);
    EXPECT_LE(b.phi_low, c.phi_low);
    EXPECT_GE(b.phi_high, c.phi_high);
    EXPECT_LE(a.sigma_low, b.sigma_low);
    EXPECT_GE(a.sigma_high, b.sigma_high);
    EXPECT_LE(b.sigma_low, c.sigma_low);
    EXPECT_GE(b.sigma_high, c.sigma_high);
  }
}

TEST(Bounds, UpperBoundFromKnownDivisors) {
  const std::uint64_t qs[] = {3, 5};
  EXPECT_EQ(phi_upper_from_divisors(BigInt(15 * 7), qs), Rational(56));
  const std::uint64_t bad[] = {7, 11};
  EXPECT_THROW(phi_upper_from_divisors(BigInt(15 * 7), bad), ValidationError);
  const std::uint64_t composite[] = {9};
  EXPECT_THROW(phi_upper_from_divisors(BigInt(27), composite), ValidationError);
}
