#include <gtest/gtest.h>

#include "lrslab/bigint.hpp"
#include "lrslab/errors.hpp"
#include "lrslab/poly.hpp"

using namespace lrslab;

namespace {
IntPoly P(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}
}  // namespace

TEST(Rational, ParsesFractionsDecimalsAndIntegers) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_THROW(parse_rational("abc"), ValidationError);
  EXPECT_THROW(parse_bigint("12x"), ValidationError);
}

TEST(Rational, FloorCeilAndIsqrt) {
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(Rational(-7, 2)), -3);
  EXPECT_EQ(ceil_of(Rational(8, 2)), 4);
  EXPECT_EQ(isqrt(BigInt(99)), 9);
  EXPECT_EQ(isqrt(BigInt(100)), 10);
}

TEST(Poly, PrintsAndExpands) {
  EXPECT_EQ(P({-1, -1, 1}).to_string(), "X^2 - X - 1");
  EXPECT_EQ(IntPoly::linear_power(1, 3), P({-1, 3, -3, 1}));
}

TEST(Poly, GcdAndSquarefreeDecomposition) {
  const IntPoly a = IntPoly::linear_power(1, 3) * IntPoly::linear_power(-2, 2) * P({1, 0, 1});
  const auto parts = squarefree_decomposition(a);
  int total = 0;
  for (const auto& [f, mult] : parts) total += f.degree() * mult;
  EXPECT_EQ(total, a.degree());
  EXPECT_EQ(squarefree_part(a), P({-1, 1}) * P({2, 1}) * P({1, 0, 1}));
  EXPECT_EQ(gcd(a, a.derivative()).degree(), 3);
}

TEST(Poly, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic(1), P({-1, 1}));
  EXPECT_EQ(cyclotomic(2), P({1, 1}));
  EXPECT_EQ(cyclotomic(4), P({1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), P({1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), P({1, 0, -1, 0, 1}));
  // X^n - 1 is the product of Phi_d over d | n.
  IntPoly prod = P({1});
  for (int d : {1, 2, 3, 5, 6, 10, 15, 30}) prod = prod * cyclotomic(d);
  EXPECT_EQ(prod, IntPoly::monomial(30) - P({1}));
}

TEST(Poly, ExactDivisionAndDivisibility) {
  const IntPoly a = P({-1, 0, 0, 1});
  EXPECT_EQ(exact_quotient(a, P({-1, 1})), P({1, 1, 1}));
  EXPECT_TRUE(divides(P({1, 1, 1}), a));
  EXPECT_FALSE(divides(P({1, 1}), a));
  EXPECT_THROW(exact_quotient(a, P({1, 1})), InvariantViolation);
}

TEST(Poly, ResultantMatchesProductOverRoots) {
  // Res((X-1)(X-2), (X-3)) = (1-3)(2-3) = 2
  EXPECT_EQ(resultant(P({2, -3, 1}), 2, P({-3, 1}), 1), 2);
  EXPECT_EQ(resultant(P({-1, -1, 1}), 2, P({-1, -1, 1}).derivative(), 1), -5);
}

TEST(Poly, SturmCountsDistinctRealRoots) {
  const IntPoly p = P({-1, 1}) * P({-2, 1}) * P({-2, 1}) * P({1, 0, 1});
  EXPECT_EQ(sturm_count(p, Rational(0), Rational(10)), 2);
  EXPECT_EQ(sturm_count(p, Rational(3, 2), Rational(2)), 1);
  EXPECT_EQ(sturm_count(p, Rational(2), Rational(3)), 0);
}
