#include <gtest/gtest.h>

#include <random>

#include "lrslab/errors.hpp"
#include "lrslab/recurrence.hpp"
#include "lrslab/spec_io.hpp"

using namespace lrslab;

namespace {

RecurrenceSpec make(std::vector<long> a, std::vector<long> u, std::string label = "") {
  RecurrenceSpec s;
  for (long v : a) s.coeffs.emplace_back(v);
  for (long v : u) s.initial.emplace_back(v);
  s.label = std::move(label);
  return s;
}

std::vector<RecurrenceSpec> sample_specs() {
  std::vector<RecurrenceSpec> out = {fibonacci_spec(), n_squared_plus_one_spec(), complex_lucas_spec(),
                                     power_of_two_minus_spec(17), make({2, -1}, {0, 1}), make({2}, {3}),
                                     make({0, 0, 1}, {1, -2, 5}), make({-3, 5, -7, 2}, {1, 0, -1, 4})};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int i = 0; i < 10; ++i) {
    const int k = 1 + static_cast<int>(rng() % 5);
    std::vector<long> a(k), u(k);
    for (auto& v : a) v = coef(rng);
    if (a.back() == 0) a.back() = 1;
    for (auto& v : u) v = coef(rng);
    out.push_back(make(a, u));
  }
  return out;
}

}  // namespace

TEST(CharPoly, FibonacciAndSmallCases) {
  EXPECT_EQ(char_poly(fibonacci_spec()).poly.to_string(), "X^2 - X - 1");
  EXPECT_EQ(char_poly(make({2}, {1})).poly.to_string(), "X - 2");
  EXPECT_EQ(char_poly(make({3, -3, 1}, {2, 5, 10})).poly, IntPoly::linear_power(1, 3));
}

TEST(CharPoly, RoundTripsToCoefficients) {
  for (const auto& s : sample_specs()) EXPECT_EQ(recurrence_coeffs(char_poly(s)), s.coeffs);
}

TEST(Spec, RejectsBadShapes) {
  EXPECT_THROW(make({1, 0}, {1, 1}).validate(), ValidationError);
  EXPECT_THROW(make({1, 1}, {1}).validate(), ValidationError);
  EXPECT_THROW(make({}, {}).validate(), ValidationError);
}

TEST(Term, KnownValues) {
  EXPECT_EQ(term(fibonacci_spec(), 10).value, 55);
  EXPECT_EQ(term(n_squared_plus_one_spec(), 5).value, 26);
  for (const auto& s : sample_specs()) EXPECT_EQ(term(s, 1).value, s.initial[0]);
}

TEST(Term, IterativeAndMatrixAgreeUpTo200) {
  for (const auto& s : sample_specs()) {
    const auto all = terms_up_to(s, 200);
    for (std::int64_t n = 1; n <= 200; ++n) {
      ASSERT_EQ(term_iterative(s, n), term_matrix(s, n)) << s.label << " n=" << n;
      ASSERT_EQ(all[static_cast<std::size_t>(n - 1)], term_matrix(s, n));
    }
  }
}

TEST(Term, LargeIndexUsesMatrixPower) {
  const BigInt f = term(fibonacci_spec(), 100000).value;
  EXPECT_EQ(f, term_iterative(fibonacci_spec(), 100000));
  EXPECT_EQ(term(n_squared_plus_one_spec(), 1'000'000).value, BigInt("1000000000001"));
}

TEST(Term, LogIsAccurate) {
  const TermValue t = term(fibonacci_spec(), 10);
  ASSERT_TRUE(t.has_log);
  EXPECT_NEAR(t.log_abs, std::log(55.0), 1e-12);
  EXPECT_LE(t.log_error, 1e-9);
  const TermValue big = term(fibonacci_spec(), 5000);
  EXPECT_LE(big.log_error, 1e-9);
}

TEST(Term, BitBudgetIsEnforced) {
  EXPECT_THROW(term(fibonacci_spec(), 5000, 1000), ResourceError);
  EXPECT_THROW(term_matrix(fibonacci_spec(), 5000, 1000), ResourceError);
  EXPECT_THROW(terms_up_to(fibonacci_spec(), 5000, 1000), ResourceError);
  EXPECT_THROW(term(fibonacci_spec(), 0), ValidationError);
}

TEST(ZeroCensus, ExamplesAndRecheck) {
  EXPECT_TRUE(zero_census(fibonacci_spec(), 100).empty());
  EXPECT_EQ(zero_census(make({2, -1}, {0, 1}), 10), std::vector<std::int64_t>{1});
  EXPECT_TRUE(zero_census(n_squared_plus_one_spec(), 1000).empty());
  for (const auto& s : sample_specs()) {
    const auto zeros = zero_census(s, 60);
    for (std::int64_t n = 1; n <= 60; ++n) {
      const bool listed = std::find(zeros.begin(), zeros.end(), n) != zeros.end();
      EXPECT_EQ(listed, term(s, n).value == 0);
    }
  }
}

TEST(LogCompare, FibonacciTenAgainstIntervals) {
  const auto fib = fibonacci_spec();
  EXPECT_EQ(term_log_compare(fib, 10, parse_rational("3.9"), parse_rational("3.91")), LogComparison::Above);
  EXPECT_EQ(term_log_compare(fib, 10, parse_rational("4.5"), parse_rational("4.6")), LogComparison::Below);
  EXPECT_EQ(term_log_compare(fib, 10, parse_rational("4.0"), parse_rational("4.01")), LogComparison::Undecided);
  EXPECT_THROW(term_log_compare(make({2, -1}, {0, 1}), 1, Rational(0), Rational(1)), ValidationError);
}

TEST(LogCompare, EscalatesForTightThresholds) {
  // ln 55 = 4.00733318523247091866270291119131693934730820...; these gaps need well over 64 bits.
  const Rational below = parse_rational("4.007333185232470918662702911191316939");
  const Rational above = parse_rational("4.007333185232470918662702911191316940");
  EXPECT_EQ(log_compare(BigInt(55), above, above + Rational(1, 1000)), LogComparison::Below);
  EXPECT_EQ(log_compare(BigInt(55), below - Rational(1, 1000), below), LogComparison::Above);
  EXPECT_EQ(log_compare(BigInt(55), below, above), LogComparison::Undecided);
}
