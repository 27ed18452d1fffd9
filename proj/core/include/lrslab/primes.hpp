#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lrslab/bigint.hpp"

namespace lrslab {

enum class Primality { Composite, ProbablePrime, ProvenPrime };

// Primes p <= limit via a plain sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// Process-wide cached list of primes up to at least `limit`. The returned
// snapshot stays valid while held, even if another thread grows the cache.
std::shared_ptr<const std::vector<std::uint32_t>> cached_primes(std::uint32_t limit);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin for all 64-bit inputs (first twelve prime bases).
bool is_prime_u64(std::uint64_t n);

// Deterministic for n < 2^64, otherwise a base-2 strong test followed by
// `rounds` GMP-driven rounds; passing inputs above 2^64 are ProbablePrime.
Primality primality(const BigInt& n, int rounds);

// One nontrivial factor of an odd composite n via Brent's cycle variant of
// Pollard rho, or 0 when `max_iterations` is exhausted.
std::uint64_t brent_rho_u64(std::uint64_t n, std::uint64_t seed, std::uint64_t max_iterations);

// Prime factorization of n >= 1 with exponents, ascending. Always complete.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

std::uint64_t euler_phi_u64(std::uint64_t n);
std::uint64_t sigma_u64(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace lrslab
