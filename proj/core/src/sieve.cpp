#include "lrslab/sieve.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "lrslab/errors.hpp"
#include "lrslab/parallel.hpp"
#include "lrslab/primes.hpp"

namespace lrslab {

namespace {

// Multiplicative inverse of odd p modulo 2^w. With it, p | r iff
// r * inv <= (2^w - 1) / p, and then r / p == r * inv (mod 2^w).
template <typename R>
R odd_inverse(R p) {
  R inv = p;  // correct to 3 bits
  for (int i = 0; i < 6; ++i) inv *= static_cast<R>(2 - p * inv);
  return inv;
}

template <typename R>
void sieve_kernel(std::uint64_t a, std::uint64_t b, const std::vector<std::uint32_t>& primes,
                  SieveTable& t) {
  const std::size_t len = static_cast<std::size_t>(b - a);
  std::vector<R> rem(len);
  for (std::size_t i = 0; i < len; ++i) rem[i] = static_cast<R>(a + i);

  for (std::uint64_t j = a + (a & 1); j < b; j += 2) {
    const std::size_t i = static_cast<std::size_t>(j - a);
    const int e = std::countr_zero(rem[i]);
    rem[i] >>= e;
    const std::uint64_t pe = std::uint64_t{1} << e;
    t.phi[i] = pe >> 1;
    t.sigma[i] = (pe << 1) - 1;
    t.big_omega[i] = static_cast<std::uint8_t>(e);
    t.tau[i] = static_cast<std::uint16_t>(e + 1);
    t.spf[i] = 2;
  }

  for (std::size_t k = 1; k < primes.size(); ++k) {
    const std::uint64_t p = primes[k];
    if (p * p >= b) break;
    const R inv = odd_inverse(static_cast<R>(p));
    const R lim = std::numeric_limits<R>::max() / static_cast<R>(p);
    std::uint64_t j = (a + p - 1) / p * p;
    for (; j < b; j += p) {
      const std::size_t i = static_cast<std::size_t>(j - a);
      R r = static_cast<R>(rem[i] * inv);
      int e = 1;
      std::uint64_t prev = 1, pk = p, s = 1 + p;
      while (static_cast<R>(r * inv) <= lim) {
        r = static_cast<R>(r * inv);
        ++e;
        prev = pk;
        pk *= p;
        s += pk;
      }
      rem[i] = r;
      t.phi[i] *= prev * (p - 1);
      t.sigma[i] *= s;
      t.big_omega[i] = static_cast<std::uint8_t>(t.big_omega[i] + e);
      t.tau[i] = static_cast<std::uint16_t>(t.tau[i] * (e + 1));
      if (t.spf[i] == 0) t.spf[i] = p;
    }
  }

  // What is left is 1 or a single prime above sqrt(b).
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint64_t q = rem[i];
    if (q > 1) {
      t.phi[i] *= q - 1;
      t.sigma[i] *= q + 1;
      t.big_omega[i] = static_cast<std::uint8_t>(t.big_omega[i] + 1);
      t.tau[i] = static_cast<std::uint16_t>(t.tau[i] * 2);
      if (t.spf[i] == 0) t.spf[i] = q;
    }
  }
  if (a == 1) t.spf[0] = 1;
}

void check_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config) {
  if (lo < 1) throw ValidationError("sieve range must start at 1 or above");
  if (hi <= lo) throw ValidationError("sieve range [lo, hi) is empty");
  if (hi > config.max_hi) {
    throw ResourceError("sieve bound " + std::to_string(hi) + " exceeds the configured maximum " +
                        std::to_string(config.max_hi));
  }
  if (config.segment_size == 0) throw ValidationError("segment size must be positive");
}

void sieve_segment(std::uint64_t a, std::uint64_t b, SieveTable& t) {
  const std::size_t len = static_cast<std::size_t>(b - a);
  t.lo = a;
  t.hi = b;
  t.phi.assign(len, 1);
  t.sigma.assign(len, 1);
  t.big_omega.assign(len, 0);
  t.tau.assign(len, 1);
  t.spf.assign(len, 0);
  const std::uint64_t root = to_u64(isqrt(from_u64(b - 1)));
  const auto primes = cached_primes(static_cast<std::uint32_t>(std::max<std::uint64_t>(root, 2)));
  if (b <= (std::uint64_t{1} << 32)) {
    sieve_kernel<std::uint32_t>(a, b, *primes, t);
  } else {
    sieve_kernel<std::uint64_t>(a, b, *primes, t);
  }
}


}  // namespace

std::size_t segment_count(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config) {
  check_range(lo, hi, config);
  return static_cast<std::size_t>((hi - lo + config.segment_size - 1) / config.segment_size);
}

void for_each_segment(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config,
                      const std::function<void(const SieveTable&, std::size_t)>& fn) {
  const std::size_t count = segment_count(lo, hi, config);
  parallel_for(count, config.threads, [&](std::size_t s) {
    const std::uint64_t a = lo + s * static_cast<std::uint64_t>(config.segment_size);
    const std::uint64_t b = std::min<std::uint64_t>(hi, a + config.segment_size);
    SieveTable t;
    sieve_segment(a, b, t);
    fn(t, s);
  });
}

SieveTable sieve_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config) {
  check_range(lo, hi, config);
  SieveTable out;
  const std::size_t len = static_cast<std::size_t>(hi - lo);
  out.lo = lo;
  out.hi = hi;
  out.phi.resize(len);
  out.sigma.resize(len);
  out.big_omega.resize(len);
  out.tau.resize(len);
  out.spf.resize(len);
  for_each_segment(lo, hi, config, [&](const SieveTable& t, std::size_t) {
    const std::size_t off = static_cast<std::size_t>(t.lo - lo);
    std::copy(t.phi.begin(), t.phi.end(), out.phi.begin() + off);
    std::copy(t.sigma.begin(), t.sigma.end(), out.sigma.begin() + off);
    std::copy(t.big_omega.begin(), t.big_omega.end(), out.big_omega.begin() + off);
    std::copy(t.tau.begin(), t.tau.end(), out.tau.begin() + off);
    std::copy(t.spf.begin(), t.spf.end(), out.spf.begin() + off);
  });
  return out;
}

namespace {

// Sums a per-segment count over [1, x]; partial sums are added in segment order.
template <typename PerSegment>
std::uint64_t sum_over(std::uint64_t x, const SieveConfig& config, PerSegment&& per_segment) {
  std::vector<std::uint64_t> partial(segment_count(1, x + 1, config), 0);
  for_each_segment(1, x + 1, config, [&](const SieveTable& t, std::size_t s) {
    partial[s] = per_segment(t);
  });
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

}  // namespace

TailCountReport count_rough(std::uint64_t x, std::uint64_t y, const SieveConfig& config) {
  if (y < 1 || x < y) throw ValidationError("count_rough needs x >= y >= 1");
  TailCountReport r;
  r.experiment = "rough";
  r.x = x;
  r.threshold = static_cast<double>(y);
  r.threshold_description = "spf(n) > " + std::to_string(y);
  r.count = sum_over(x, config, [y](const SieveTable& t) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < t.size(); ++i) c += t.spf[i] > y && t.lo + i > 1;
    return c;
  });
  // x / log y; log 1 = 0 leaves only the trivial bound x.
  r.comparison = y >= 2 ? static_cast<double>(x) / std::log(static_cast<double>(y)) : static_cast<double>(x);
  return r;
}

TailCountReport count_high_omega(std::uint64_t x, const SieveConfig& config) {
  if (x < 10) throw ValidationError("count_high_omega needs x >= 10");
  TailCountReport r;
  r.experiment = "high_omega";
  r.x = x;
  const double lx = std::log(static_cast<double>(x));
  r.threshold = 10.0 * std::log(lx);
  r.threshold_description = "Omega(n) >= 10 log log x";
  // Omega is an integer, so >= threshold means >= ceil(threshold).
  const auto need = static_cast<unsigned>(std::ceil(r.threshold));
  r.count = sum_over(x, config, [need](const SieveTable& t) {
    std::uint64_t c = 0;
    for (auto w : t.big_omega) c += w >= need;
    return c;
  });
  r.comparison = static_cast<double>(x) / (lx * lx);
  return r;
}

TailCountReport count_tau_sigma_large(std::uint64_t x, const FactorBudget& budget, const SieveConfig& config) {
  if (x < 10) throw ValidationError("count_tau_sigma_large needs x >= 10");
  budget.validate();
  TailCountReport r;
  r.experiment = "tau_sigma";
  r.x = x;
  const double lx = std::log(static_cast<double>(x));
  r.threshold = std::exp(std::sqrt(lx));
  r.threshold_description = "tau(sigma(n)) > exp(sqrt(log x))";
  // tau is an integer, so > threshold means >= floor(threshold) + 1.
  const auto need = static_cast<std::uint64_t>(std::floor(r.threshold)) + 1;
  const std::size_t segments = segment_count(1, x + 1, config);
  std::vector<std::uint64_t> hits(segments, 0), undecided(segments, 0);
  for_each_segment(1, x + 1, config, [&](const SieveTable& t, std::size_t s) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const FactorResult f = factor(from_u64(t.sigma[i]), budget);
      const auto tau = tau_from_factors(f);
      if (!tau || (budget.strict && f.uses_probable())) {
        ++undecided[s];
      } else if (*tau >= from_u64(need)) {
        ++hits[s];
      }
    }
  });
  for (std::size_t s = 0; s < segments; ++s) {
    r.count += hits[s];
    r.undecided += undecided[s];
  }
  r.comparison = static_cast<double>(x) / (lx * lx);
  return r;
}

CdfValue schoenberg_cdf(std::uint64_t x, const Rational& alpha, const SieveConfig& config) {
  if (x < 2) throw ValidationError("schoenberg_cdf needs x >= 2");
  if (alpha < 0 || alpha > 1) throw ValidationError("schoenberg_cdf needs 0 <= alpha <= 1");
  if (!fits_u64(alpha.get_num()) || !fits_u64(alpha.get_den())) {
    throw ValidationError("alpha numerator and denominator must fit in 64 bits");
  }
  const auto num = static_cast<unsigned __int128>(to_u64(alpha.get_num()));
  const auto den = static_cast<unsigned __int128>(to_u64(alpha.get_den()));
  CdfValue out;
  out.x = x;
  out.count = sum_over(x, config, [&](const SieveTable& t) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      c += static_cast<unsigned __int128>(t.phi[i]) * den <= num * (t.lo + i);
    }
    return c;
  });
  return out;
}

std::uint64_t count_phi_ratio_above_inv_sqrt2(std::uint64_t x, const SieveConfig& config) {
  if (x < 1) throw ValidationError("x must be positive");
  return sum_over(x, config, [](const SieveTable& t) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto p = static_cast<unsigned __int128>(t.phi[i]);
      const auto n = static_cast<unsigned __int128>(t.lo + i);
      c += 2 * p * p > n * n;
    }
    return c;
  });
}

ExtremalScan extremal_scan(std::uint64_t x, const SieveConfig& config) {
  if (x < 3) throw ValidationError("extremal_scan needs x >= 3");
  const std::size_t segments = segment_count(3, x + 1, config);
  std::vector<ExtremalScan> parts(segments);
  for_each_segment(3, x + 1, config, [&](const SieveTable& t, std::size_t s) {
    ExtremalScan e;
    e.min_phi_ratio = std::numeric_limits<double>::infinity();
    e.max_sigma_ratio = -1.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto n = static_cast<double>(t.lo + i);
      const double ll = std::log(std::log(n));
      const double pr = static_cast<double>(t.phi[i]) * ll / n;
      const double sr = static_cast<double>(t.sigma[i]) / (n * ll);
      if (pr < e.min_phi_ratio) {
        e.min_phi_ratio = pr;
        e.min_phi_n = t.lo + i;
      }
      if (sr > e.max_sigma_ratio) {
        e.max_sigma_ratio = sr;
        e.max_sigma_n = t.lo + i;
      }
    }
    parts[s] = e;
  });
  ExtremalScan out = parts[0];
  for (std::size_t s = 1; s < segments; ++s) {
    if (parts[s].min_phi_ratio < out.min_phi_ratio) {
      out.min_phi_ratio = parts[s].min_phi_ratio;
      out.min_phi_n = parts[s].min_phi_n;
    }
    if (parts[s].max_sigma_ratio > out.max_sigma_ratio) {
      out.max_sigma_ratio = parts[s].max_sigma_ratio;
      out.max_sigma_n = parts[s].max_sigma_n;
    }
  }
  return out;
}

}  // namespace lrslab
