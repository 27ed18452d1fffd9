#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrslab/bigint.hpp"

namespace lrslab {

enum class Certainty { Proven, Probable };
enum class CofactorStatus { One, Composite };

const char* to_string(Certainty c);

struct FactorBudget {
  std::uint32_t trial_bound = 1'000'000;
  int primality_rounds = 25;
  // Pollard-Brent iterations allowed per composite.
  std::uint64_t rho_iterations = 10'000'000;
  std::uint64_t seed = 20240101;
  // Demote verdicts that rely on probable primes to UNDECIDED downstream.
  bool strict = false;

  void validate() const;
};

struct PrimePower {
  BigInt prime;
  int exponent = 0;
  Certainty certainty = Certainty::Proven;
};

// m = cofactor * prod p^e. Every prime <= trial_bound has been removed, so
// all prime factors of the cofactor exceed trial_bound, and the cofactor is
// never itself prime.
struct FactorResult {
  BigInt m;
  std::vector<PrimePower> factors;  // ascending by prime
  BigInt cofactor = 1;
  CofactorStatus cofactor_status = CofactorStatus::One;
  std::uint32_t trial_bound = 0;

  bool complete() const { return cofactor_status == CofactorStatus::One; }
  bool uses_probable() const;
  // Complete and every prime proven.
  bool exact() const { return complete() && !uses_probable(); }
  BigInt reconstruct() const;
};

// Certified enclosures for phi(m) and sigma(m).
struct PhiSigmaBounds {
  Rational phi_low;
  Rational phi_high;
  Rational sigma_low;
  Rational sigma_high;
  bool exact = false;
};

FactorResult factor(const BigInt& m, const FactorBudget& budget);

PhiSigmaBounds phi_sigma_bounds(const FactorResult& f);

// tau(m) when f is exact, nullopt otherwise.
std::optional<BigInt> tau_from_factors(const FactorResult& f);

// m * prod (1 - 1/q) over distinct primes q known to divide m: an upper bound
// for phi(m) because further prime factors only lower phi(m)/m. Each q must be
// a proven prime dividing m (checked).
Rational phi_upper_from_divisors(const BigInt& m, std::span<const std::uint64_t> primes);

// Structured (JSON) record of a factor result.
std::string format_factor_result(const FactorResult& f);

}  // namespace lrslab
