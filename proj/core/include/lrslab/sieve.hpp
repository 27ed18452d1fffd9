#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lrslab/bigint.hpp"
#include "lrslab/factor.hpp"

namespace lrslab {

struct SieveConfig {
  std::uint64_t max_hi = std::uint64_t{1} << 40;
  std::size_t segment_size = std::size_t{1} << 22;
  unsigned threads = 1;
};

// phi, sigma, Omega, tau and smallest prime factor for every n in [lo, hi).
// spf(1) = 1; phi(1) = sigma(1) = tau(1) = 1 and Omega(1) = 0.
struct SieveTable {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> phi;
  std::vector<std::uint64_t> sigma;
  std::vector<std::uint8_t> big_omega;
  std::vector<std::uint16_t> tau;
  std::vector<std::uint64_t> spf;

  std::size_t size() const { return static_cast<std::size_t>(hi - lo); }
  bool contains(std::uint64_t n) const { return n >= lo && n < hi; }
  std::size_t index(std::uint64_t n) const { return static_cast<std::size_t>(n - lo); }
};

SieveTable sieve_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config = {});

// Sieves [lo, hi) segment by segment without materialising the whole range.
// fn(table, segment_index) may run concurrently for different segments when
// config.threads > 1; segment indices are dense from 0.
std::size_t segment_count(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config);
void for_each_segment(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config,
                      const std::function<void(const SieveTable&, std::size_t)>& fn);

struct TailCountReport {
  std::string experiment;
  std::uint64_t x = 0;
  std::string threshold_description;
  double threshold = 0.0;
  std::uint64_t count = 0;
  double comparison = 0.0;
  std::uint64_t undecided = 0;
};

// #{n <= x : spf(n) > y}; n = 1 never counts. Compared with x / log y.
TailCountReport count_rough(std::uint64_t x, std::uint64_t y, const SieveConfig& config = {});

// #{n <= x : Omega(n) >= 10 log log x}. Compared with x / (log x)^2.
TailCountReport count_high_omega(std::uint64_t x, const SieveConfig& config = {});

// #{n <= x : tau(sigma(n)) > exp(sqrt(log x))}; factorizations that exhaust
// the budget are tallied as undecided. Compared with x / (log x)^2.
TailCountReport count_tau_sigma_large(std::uint64_t x, const FactorBudget& budget = {},
                                      const SieveConfig& config = {});

struct CdfValue {
  std::uint64_t count = 0;
  std::uint64_t x = 0;
  Rational fraction() const {
    Rational r(from_u64(count), from_u64(x));
    r.canonicalize();
    return r;
  }
};

// (1/x) #{n <= x : phi(n)/n <= alpha}, compared exactly.
CdfValue schoenberg_cdf(std::uint64_t x, const Rational& alpha, const SieveConfig& config = {});

// #{n <= x : phi(n)/n > 1/sqrt 2}, i.e. 2 phi(n)^2 > n^2.
std::uint64_t count_phi_ratio_above_inv_sqrt2(std::uint64_t x, const SieveConfig& config = {});

struct ExtremalScan {
  double min_phi_ratio = 0.0;  // min phi(n) log log n / n
  std::uint64_t min_phi_n = 0;
  double max_sigma_ratio = 0.0;  // max sigma(n) / (n log log n)
  std::uint64_t max_sigma_n = 0;
};

ExtremalScan extremal_scan(std::uint64_t x, const SieveConfig& config = {});

}  // namespace lrslab
