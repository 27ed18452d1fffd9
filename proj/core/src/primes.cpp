#include "lrslab/primes.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "lrslab/errors.hpp"

namespace lrslab {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::shared_ptr<const std::vector<std::uint32_t>> cached_primes(std::uint32_t limit) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<std::uint32_t>> primes;
  static std::uint32_t covered = 0;
  std::lock_guard<std::mutex> lock(mu);
  if (!primes || covered < limit) {
    const std::uint32_t target = std::max<std::uint32_t>(limit, 1u << 16);
    primes = std::make_shared<const std::vector<std::uint32_t>>(primes_up_to(target));
    covered = target;
  }
  return primes;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kSmall) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Primality primality(const BigInt& n, int rounds) {
  if (n < 2) return Primality::Composite;
  if (fits_u64(n)) return is_prime_u64(to_u64(n)) ? Primality::ProvenPrime : Primality::Composite;
  if (mpz_even_p(n.get_mpz_t())) return Primality::Composite;
  // Strong base-2 test first: one failing witness proves compositeness and is
  // far cheaper than the full GMP routine on very large inputs.
  BigInt d = n - 1;
  mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigInt x;
  BigInt two = 2;
  mpz_powm(x.get_mpz_t(), two.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const BigInt nm1 = n - 1;
  if (x != 1 && x != nm1) {
    bool witness = true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == nm1) {
        witness = false;
        break;
      }
    }
    if (witness) return Primality::Composite;
  }
  if (rounds > 0 && mpz_probab_prime_p(n.get_mpz_t(), rounds) == 0) return Primality::Composite;
  return Primality::ProbablePrime;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t brent_rho_u64(std::uint64_t n, std::uint64_t seed, std::uint64_t max_iterations) {
  if (n % 2 == 0) return 2;
  std::uint64_t state = seed;
  std::uint64_t spent = 0;
  while (spent < max_iterations) {
    state = splitmix64(state);
    const std::uint64_t c = 1 + state % (n - 1);
    state = splitmix64(state);
    std::uint64_t y = state % n;
    std::uint64_t m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](std::uint64_t v) {
      std::uint64_t s = mulmod(v, v, n) + c;
      if (s >= n || s < c) s -= n;
      return s;
    };
    while (g == 1 && spent < max_iterations) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t steps = std::min(m, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        spent += steps;
        g = gcd_u64(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time from the saved position.
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  if (n == 0) throw ValidationError("factor_u64 of zero");
  auto take = [&](std::uint64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  take(2);
  for (std::uint64_t p = 3; p < 1000 && p * p <= n; p += 2) take(p);
  std::vector<std::uint64_t> pending;
  if (n > 1) pending.push_back(n);
  std::uint64_t seed = 0x5eed;
  while (!pending.empty()) {
    std::uint64_t m = pending.back();
    pending.pop_back();
    if (m == 1) continue;
    if (is_prime_u64(m)) {
      out.emplace_back(m, 1);
      continue;
    }
    std::uint64_t d = 0;
    while (d == 0) {
      seed = splitmix64(seed);
      d = brent_rho_u64(m, seed, 1u << 20);
    }
    pending.push_back(d);
    pending.push_back(m / d);
  }
  std::sort(out.begin(), out.end());
  // Merge equal primes reached through different rho splits.
  std::vector<std::pair<std::uint64_t, int>> merged;
  for (const auto& [p, e] : out) {
    if (!merged.empty() && merged.back().first == p) {
      merged.back().second += e;
    } else {
      merged.emplace_back(p, e);
    }
  }
  return merged;
}

std::uint64_t euler_phi_u64(std::uint64_t n) {
  std::uint64_t result = n;
  for (const auto& [p, e] : factor_u64(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t sigma_u64(std::uint64_t n) {
  std::uint64_t result = 1;
  for (const auto& [p, e] : factor_u64(n)) {
    std::uint64_t term = 1, pe = 1;
    for (int i = 0; i < e; ++i) {
      pe *= p;
      term += pe;
    }
    result *= term;
  }
  return result;
}

}  // namespace lrslab
