#include <gtest/gtest.h>

#include "lrslab/errors.hpp"
#include "lrslab/forge.hpp"
#include "lrslab/primes.hpp"

using namespace lrslab;

namespace {
const std::vector<std::uint64_t> kNine = {3, 5, 7, 11, 13, 17, 19, 23, 29};
}

TEST(Forge, HarmonicSums) {
  const HarmonicCheck nine = harmonic_check(kNine);
  EXPECT_TRUE(nine.exceeds_one);
  EXPECT_NEAR(nine.sum.get_d(), 1.0334, 1e-4);
  EXPECT_EQ(harmonic_check({3, 5}).sum, Rational(8, 15));
  EXPECT_FALSE(harmonic_check({3, 5}).exceeds_one);
  EXPECT_EQ(harmonic_check({3}).sum, Rational(1, 3));
  EXPECT_THROW(harmonic_check({2, 3}), ValidationError);
  EXPECT_THROW(harmonic_check({3, 9}), ValidationError);
  EXPECT_THROW(harmonic_check({5, 3}), ValidationError);
  EXPECT_THROW(harmonic_check({}), ValidationError);
}

TEST(Forge, BuildA) {
  EXPECT_EQ(build_a({3, 5}), 17);
  EXPECT_EQ(build_a({3}), 5);
  EXPECT_EQ(build_a(kNine), BigInt("3234846617"));
  for (std::uint64_t off : {0, 1, 7}) {
    const BigInt a = build_a(kNine, off);
    for (auto q : kNine) EXPECT_EQ(mpz_fdiv_ui(a.get_mpz_t(), q), 2u);
  }
}

TEST(Forge, ModulusIsTheLeastCommonMultiple) {
  EXPECT_EQ(lcm_modulus({3, 5}), 4u);
  EXPECT_EQ(lcm_modulus({3}), 2u);
  const std::uint64_t l = lcm_modulus(kNine);
  EXPECT_EQ(l, 55440u);
  for (auto q : kNine) EXPECT_EQ(l % (q - 1), 0u);
  for (const auto& [r, e] : factor_u64(l)) {
    bool common = true;
    for (auto q : kNine) common = common && (l / r) % (q - 1) == 0;
    EXPECT_FALSE(common) << "L/" << r;
  }
}

TEST(Forge, PrimeSearch) {
  EXPECT_EQ(find_prime_p({3, 5}, 3, 1000), 5u);
  EXPECT_EQ(find_prime_p({3}, 3, 1000), 3u);
  EXPECT_EQ(find_prime_p(kNine, 2, 1'000'000), 55441u);
  EXPECT_EQ(find_prime_p(kNine, 55442, 10'000'000) % 55440, 1u);
  EXPECT_THROW(find_prime_p(kNine, 2, 50000), ResourceError);
  EXPECT_THROW(find_prime_p(kNine, 1, 50000), ValidationError);
}

TEST(Forge, SmallHarmonicSumFailsTheProductComparison) {
  const Certificate c = certify({3, 5}, 17, 5);
  EXPECT_FALSE(c.accepted);
  bool saw = false;
  for (const auto& f : c.facts) {
    if (f.name.rfind("(ii)", 0) == 0) {
      saw = true;
      EXPECT_FALSE(f.ok);
    }
    if (f.name.rfind("(i) ", 0) == 0) {
      EXPECT_TRUE(f.ok);  // 2^5 - 17 = 15
    }
  }
  EXPECT_TRUE(saw);
  const Certificate r = run_forge(ForgeConfig{{3, 5}});
  EXPECT_FALSE(r.accepted);
  EXPECT_NE(r.reason.find("8/15"), std::string::npos);
}

TEST(Forge, NinePrimeCertificate) {
  const Certificate c = run_forge(ForgeConfig{kNine});
  ASSERT_TRUE(c.accepted) << c.reason;
  EXPECT_EQ(c.a, BigInt("3234846617"));
  EXPECT_EQ(c.modulus, 55440u);
  EXPECT_EQ(c.p, 55441u);
  EXPECT_TRUE(verify_certificate(c).ok);
  const Certificate back = parse_certificate(format_certificate(c));
  EXPECT_EQ(format_certificate(back), format_certificate(c));
  EXPECT_TRUE(verify_certificate(back).ok);
}

TEST(Forge, TamperedCertificatesAreRejected) {
  const Certificate good = run_forge(ForgeConfig{kNine});
  Certificate bad_a = good;
  bad_a.a += 1;
  const VerifyResult r = verify_certificate(bad_a);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.reason.find("fact (i)"), std::string::npos) << r.reason;

  Certificate bad_p = good;
  bad_p.p = 55439;
  EXPECT_FALSE(verify_certificate(bad_p).ok);

  Certificate bad_l = good;
  bad_l.modulus = 27720;
  EXPECT_FALSE(verify_certificate(bad_l).ok);

  Certificate bad_verdict = good;
  bad_verdict.accepted = false;
  EXPECT_FALSE(verify_certificate(bad_verdict).ok);

  EXPECT_THROW(parse_certificate("{\"qs\": [3]}"), ValidationError);
}

TEST(Forge, OffsetLiftStillCertifies) {
  ForgeConfig cfg{kNine};
  cfg.offset = 3;
  const Certificate c = run_forge(cfg);
  EXPECT_TRUE(c.accepted) << c.reason;
  EXPECT_TRUE(verify_certificate(c).ok);
}
