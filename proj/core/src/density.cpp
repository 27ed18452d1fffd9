#include "lrslab/density.hpp"

#include <cmath>

#include "lrslab/errors.hpp"
#include "lrslab/parallel.hpp"
#include "lrslab/primes.hpp"

namespace lrslab {

PolyExperimentReport poly_experiment(std::uint64_t x, unsigned threads) {
  if (x < 10) throw ValidationError("poly_experiment needs x >= 10");
  // n^2 + 1 and phi(n)^2 + 1 must fit in 64 bits.
  if (x > 4'000'000'000ULL) throw ResourceError("poly_experiment supports x up to 4e9");
  SieveConfig config;
  config.threads = threads;
  const SieveTable table = sieve_range(1, x + 1, config);

  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (static_cast<std::size_t>(x) + kChunk - 1) / kChunk;
  std::vector<PolyExperimentReport> parts(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    PolyExperimentReport& r = parts[c];
    const std::uint64_t first = 1 + c * kChunk;
    const std::uint64_t last = std::min<std::uint64_t>(x, first + kChunk - 1);
    for (std::uint64_t n = first; n <= last; ++n) {
      const std::uint64_t phi_n = table.phi[table.index(n)];
      const bool fails = phi_n * phi_n + 1 > euler_phi_u64(n * n + 1);
      const auto phi_wide = static_cast<unsigned __int128>(phi_n);
      const auto n_wide = static_cast<unsigned __int128>(n);
      const bool in_tail = 2 * phi_wide * phi_wide > n_wide * n_wide;
      const bool odd = n % 2 == 1;
      if (fails) {
        ++r.failures;
        ++(odd ? r.failures_odd : r.failures_even);
      }
      if (in_tail) ++r.tail_count;
      if (odd && in_tail) {
        ++r.implication_checked;
        if (!fails) r.implication_violations.push_back(n);
      }
      if (!odd && 2 * phi_n > n) r.even_violations.push_back(n);
    }
  });

  PolyExperimentReport out;
  out.x = x;
  for (const auto& r : parts) {
    out.failures += r.failures;
    out.failures_odd += r.failures_odd;
    out.failures_even += r.failures_even;
    out.tail_count += r.tail_count;
    out.implication_checked += r.implication_checked;
    out.implication_violations.insert(out.implication_violations.end(), r.implication_violations.begin(),
                                      r.implication_violations.end());
    out.even_violations.insert(out.even_violations.end(), r.even_violations.begin(), r.even_violations.end());
  }
  out.failure_density = static_cast<double>(out.failures) / static_cast<double>(x);
  out.tail_density = static_cast<double>(out.tail_count) / static_cast<double>(x);
  return out;
}

std::vector<DashboardRow> lemma_dashboard(const std::vector<std::uint64_t>& x_values, double y_exponent,
                                          const FactorBudget& budget, const SieveConfig& config) {
  if (!(y_exponent > 0.0 && y_exponent < 1.0)) throw ValidationError("y exponent must lie in (0, 1)");
  for (auto x : x_values) {
    if (x < 10) throw ValidationError("dashboard rows need x >= 10");
  }
  std::vector<DashboardRow> rows;
  for (auto x : x_values) {
    DashboardRow row;
    row.x = x;
    const double xd = static_cast<double>(x);
    const auto y = static_cast<std::uint64_t>(std::floor(std::pow(xd, y_exponent) + 1e-9));
    row.rough = count_rough(x, std::max<std::uint64_t>(y, 1), config);
    // Reference curve uses the unrounded x^e.
    row.rough.comparison = xd / (y_exponent * std::log(xd));
    row.high_omega = count_high_omega(x, config);
    row.tau_sigma = count_tau_sigma_large(x, budget, config);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lrslab
