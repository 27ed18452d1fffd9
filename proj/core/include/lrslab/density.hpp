#pragma once

#include <cstdint>
#include <vector>

#include "lrslab/factor.hpp"
#include "lrslab/sieve.hpp"

namespace lrslab {

// U_n = n^2 + 1 checked against phi(U_n) >= U_phi(n) for every n <= x.
struct PolyExperimentReport {
  std::uint64_t x = 0;
  std::uint64_t failures = 0;  // n with phi(n)^2 + 1 > phi(n^2 + 1)
  std::uint64_t failures_odd = 0;
  std::uint64_t failures_even = 0;
  std::uint64_t tail_count = 0;  // n with phi(n)/n > 1/sqrt 2
  double failure_density = 0.0;
  double tail_density = 0.0;
  // Odd n above the tail threshold: each one must fail.
  std::uint64_t implication_checked = 0;
  std::vector<std::uint64_t> implication_violations;
  // Even n with phi(n)/n > 1/2.
  std::vector<std::uint64_t> even_violations;
};

PolyExperimentReport poly_experiment(std::uint64_t x, unsigned threads = 1);

struct DashboardRow {
  std::uint64_t x = 0;
  TailCountReport rough;       // Phi(x, y), y = floor(x^y_exponent)
  TailCountReport high_omega;
  TailCountReport tau_sigma;
};

std::vector<DashboardRow> lemma_dashboard(const std::vector<std::uint64_t>& x_values, double y_exponent = 0.1,
                                          const FactorBudget& budget = {}, const SieveConfig& config = {});

}  // namespace lrslab
