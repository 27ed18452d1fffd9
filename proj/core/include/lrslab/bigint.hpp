#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lrslab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Parses a decimal integer with optional sign. Throws ValidationError.
BigInt parse_bigint(std::string_view text);

// Parses "p/q", a decimal such as "0.125", or an integer into an exact
// rational. Throws ValidationError.
Rational parse_rational(std::string_view text);

std::string to_decimal(const BigInt& v);
std::string to_string(const Rational& v);

// Number of bits in |v|; 0 for v == 0.
std::size_t bit_length(const BigInt& v);

bool fits_u64(const BigInt& v);
std::uint64_t to_u64(const BigInt& v);
BigInt from_u64(std::uint64_t v);

// floor and ceiling of an exact rational.
BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);

// Integer r with r*r <= v < (r+1)*(r+1); v >= 0.
BigInt isqrt(const BigInt& v);

// 64-bit mixing for seeding per-task RNG streams.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t hash_bigint(const BigInt& v);

}  // namespace lrslab
