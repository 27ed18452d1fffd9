#include <gtest/gtest.h>

#include "lrslab/errors.hpp"
#include "lrslab/spec_io.hpp"

using namespace lrslab;

TEST(SpecIo, RoundTrip) {
  for (const auto& s : {fibonacci_spec(), n_squared_plus_one_spec(), complex_lucas_spec(),
                        power_of_two_minus_spec(BigInt("3234846617"))}) {
    const RecurrenceSpec back = parse_spec(format_spec(s));
    EXPECT_EQ(back.coeffs, s.coeffs);
    EXPECT_EQ(back.initial, s.initial);
    EXPECT_EQ(back.label, s.label);
  }
}

TEST(SpecIo, KeepsBigIntegersExact) {
  const auto s = parse_spec(
      R"({"label":"big","order":1,"coeffs":["123456789012345678901234567890"],"initial":["-5"]})");
  EXPECT_EQ(s.coeffs[0], BigInt("123456789012345678901234567890"));
  EXPECT_EQ(s.initial[0], -5);
}

TEST(SpecIo, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_spec("not json"), ValidationError);
  EXPECT_THROW(parse_spec(R"({"order":2,"coeffs":["1"],"initial":["1","1"]})"), ValidationError);
  EXPECT_THROW(parse_spec(R"({"order":1,"coeffs":["0"],"initial":["1"]})"), ValidationError);
  EXPECT_THROW(parse_spec(R"({"order":1,"coeffs":["x"],"initial":["1"]})"), ValidationError);
}

TEST(SpecIo, PowerOfTwoMinusA) {
  const auto s = power_of_two_minus_spec(17);
  for (int n = 1; n <= 40; ++n) {
    BigInt expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), 2, static_cast<unsigned long>(n));
    expect -= 17;
    EXPECT_EQ(term(s, n).value, expect);
  }
  EXPECT_EQ(char_poly(s).poly.to_string(), "X^2 - 3X + 2");
}
