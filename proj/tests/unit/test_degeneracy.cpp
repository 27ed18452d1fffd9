#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "lrslab/recurrence.hpp"

using namespace lrslab;

namespace {
IntPoly P(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}
}  // namespace

TEST(Degeneracy, GoldenRatioPolynomialIsNondegenerate) {
  const auto d = degeneracy_check(CharPoly{P({-1, -1, 1})});
  EXPECT_TRUE(d.nondegenerate);
  EXPECT_TRUE(d.witnesses.empty());
  EXPECT_FALSE(d.polynomial_type);
}

TEST(Degeneracy, XSquaredPlusOneHasRatioMinusOne) {
  const auto d = degeneracy_check(CharPoly{P({1, 0, 1})});
  EXPECT_FALSE(d.nondegenerate);
  ASSERT_EQ(d.witnesses.size(), 1u);
  EXPECT_EQ(d.witnesses[0].order, 2);
}

TEST(Degeneracy, PolynomialTypeFlag) {
  EXPECT_TRUE(degeneracy_check(CharPoly{IntPoly::linear_power(1, 3)}).polynomial_type);
  EXPECT_TRUE(degeneracy_check(CharPoly{IntPoly::linear_power(-1, 4)}).polynomial_type);
  EXPECT_TRUE(degeneracy_check(CharPoly{IntPoly::linear_power(1, 3)}).nondegenerate);
  EXPECT_FALSE(degeneracy_check(CharPoly{P({-1, 0, 1})}).polynomial_type);
}

TEST(Degeneracy, CubeRootsOfUnity) {
  // X^3 - 1: every ratio of distinct roots is a primitive cube root of unity.
  const auto d = degeneracy_check(CharPoly{P({-1, 0, 0, 1})});
  EXPECT_FALSE(d.nondegenerate);
  for (const auto& w : d.witnesses) EXPECT_EQ(w.order, 3);
  EXPECT_EQ(d.witnesses.size(), 3u);
}

TEST(Degeneracy, MixedCubic) {
  // (X^2 + X + 1)(X - 2): the complex pair has ratio of order 3, 2 is unrelated.
  const auto d = degeneracy_check(CharPoly{P({1, 1, 1}) * P({-2, 1})});
  EXPECT_FALSE(d.nondegenerate);
  ASSERT_EQ(d.witnesses.size(), 1u);
  EXPECT_EQ(d.witnesses[0].order, 3);
  EXPECT_TRUE(degeneracy_check(CharPoly{P({2, -1, 1}) * P({-3, 1})}).nondegenerate);
}

TEST(Degeneracy, AgreesWithQuadraticFieldOracle) {
  int checked = 0;
  for (long b = -10; b <= 10; ++b) {
    for (long c = -10; c <= 10; ++c) {
      if (c == 0) continue;
      const auto d = degeneracy_check(CharPoly{P({-c, -b, 1})});
      EXPECT_EQ(!d.nondegenerate, oracle::quadratic_degenerate(b, c)) << "b=" << b << " c=" << c;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 420);
}
