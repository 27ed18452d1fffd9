#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrslab/bigint.hpp"

namespace lrslab {

struct HarmonicCheck {
  Rational sum;
  bool exceeds_one = false;
};

// Exact sum of 1/q. Throws ValidationError unless qs is a strictly
// increasing list of odd primes.
HarmonicCheck harmonic_check(const std::vector<std::uint64_t>& qs);

// Smallest a > 2 with a = 2 mod every q, plus offset * prod q.
BigInt build_a(const std::vector<std::uint64_t>& qs, std::uint64_t offset = 0);

// lcm of the q - 1.
std::uint64_t lcm_modulus(const std::vector<std::uint64_t>& qs);

// Smallest prime p >= start with p = 1 mod L. Throws ResourceError once the
// candidates pass search_limit.
std::uint64_t find_prime_p(const std::vector<std::uint64_t>& qs, std::uint64_t start,
                           std::uint64_t search_limit);

struct CertificateFact {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Certificate {
  std::vector<std::uint64_t> qs;
  BigInt a;
  std::uint64_t modulus = 0;  // L
  std::uint64_t p = 0;
  std::vector<CertificateFact> facts;
  bool accepted = false;
  std::string reason;  // first failing fact when rejected
};

// Checks for U_n = 2^n - a at n = p:
//   (i)   every q divides 2^p - a,
//   (ii)  (2^p - a) prod (1 - 1/q) < 2^{p-1} - a,
//   (iii) hence phi(2^p - a) < 2^{phi(p)} - a.
Certificate certify(const std::vector<std::uint64_t>& qs, const BigInt& a, std::uint64_t p);

struct ForgeConfig {
  std::vector<std::uint64_t> qs;
  std::uint64_t search_limit = 100'000'000;
  std::uint64_t offset = 0;
};

// Builds a, searches p in the progression 1 mod L and certifies, moving to
// the next prime while fact (ii) fails. Rejects at once when the harmonic
// sum is at most 1: the construction asks for sum 1/q > 1 even though a
// product below 1/2 is all (ii) needs.
Certificate run_forge(const ForgeConfig& config);

std::string format_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text);

struct VerifyResult {
  bool ok = false;
  std::string reason;
};

// Re-derives every fact from (qs, a, L, p) with modular exponentiation and
// integer comparisons, and checks the recorded facts and verdict agree.
VerifyResult verify_certificate(const Certificate& cert);

}  // namespace lrslab
