#include "lrslab/factor.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include <json.hpp>

#include "lrslab/errors.hpp"
#include "lrslab/primes.hpp"

namespace lrslab {

const char* to_string(Certainty c) { return c == Certainty::Proven ? "PROVEN" : "PROBABLE"; }

void FactorBudget::validate() const {
  if (trial_bound < 2) throw ValidationError("trial bound must be at least 2");
  if (primality_rounds < 0) throw ValidationError("primality rounds must be non-negative");
}

bool FactorResult::uses_probable() const {
  return std::any_of(factors.begin(), factors.end(),
                     [](const PrimePower& pp) { return pp.certainty == Certainty::Probable; });
}

BigInt FactorResult::reconstruct() const {
  BigInt out = cofactor;
  for (const auto& pp : factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), static_cast<unsigned long>(pp.exponent));
    out *= pe;
  }
  return out;
}

namespace {

// Primes up to a bound grouped so each group's product fits in 64 bits; one
// mpz_fdiv_ui per group replaces one pass per prime over the big integer.
struct TrialPlan {
  std::vector<std::uint32_t> primes;
  std::vector<std::pair<std::size_t, std::uint64_t>> groups;  // (end index, product)
};

std::shared_ptr<const TrialPlan> trial_plan(std::uint32_t bound) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const TrialPlan>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(bound); it != cache.end()) return it->second;
  auto plan = std::make_shared<TrialPlan>();
  plan->primes = primes_up_to(bound);
  unsigned __int128 product = 1;
  for (std::size_t i = 0; i < plan->primes.size(); ++i) {
    const unsigned __int128 next = product * plan->primes[i];
    if (next >> 64) {
      plan->groups.emplace_back(i, static_cast<std::uint64_t>(product));
      product = plan->primes[i];
    } else {
      product = next;
    }
  }
  plan->groups.emplace_back(plan->primes.size(), static_cast<std::uint64_t>(product));
  if (cache.size() > 8) cache.clear();
  cache[bound] = plan;
  return plan;
}

int remove_factor(BigInt& x, unsigned long p) {
  int e = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    ++e;
  }
  return e;
}

int remove_factor(BigInt& x, const BigInt& p) {
  int e = 0;
  while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

// Brent's variant of Pollard rho on arbitrary-precision n; 0 on exhaustion.
BigInt brent_rho(const BigInt& n, std::uint64_t seed, std::uint64_t max_iterations) {
  std::uint64_t state = seed;
  std::uint64_t spent = 0;
  BigInt x, y, ys, q, g, c, diff;
  while (spent < max_iterations) {
    state = splitmix64(state);
    c = from_u64(state);
    c = c % (n - 1) + 1;
    state = splitmix64(state);
    y = from_u64(state);
    y %= n;
    q = 1;
    g = 1;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](BigInt& v) {
      mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
      mpz_add(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1 && spent < max_iterations) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t steps = std::min(m, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          f(y);
          mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
          mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
          mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        spent += steps;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n || g == 0) {
      g = 1;
      for (std::uint64_t guard = 0; g == 1 && guard < m + 1; ++guard) {
        f(ys);
        mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
        mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n && g != 1 && g != 0) return g;
  }
  return 0;
}

BigInt split(const BigInt& n, const FactorBudget& budget) {
  if (budget.rho_iterations == 0) return 0;
  const std::uint64_t seed = splitmix64(budget.seed ^ hash_bigint(n));
  if (fits_u64(n)) return from_u64(brent_rho_u64(to_u64(n), seed, budget.rho_iterations));
  return brent_rho(n, seed, budget.rho_iterations);
}

}  // namespace

FactorResult factor(const BigInt& m, const FactorBudget& budget) {
  if (m < 1) throw ValidationError("factor expects m >= 1");
  budget.validate();
  FactorResult out;
  out.m = m;
  out.trial_bound = budget.trial_bound;
  BigInt rem = m;

  const auto plan = trial_plan(budget.trial_bound);
  std::size_t begin = 0;
  for (const auto& [end, product] : plan->groups) {
    if (rem == 1) break;
    // Everything left is 1 or a prime once p^2 exceeds it.
    const std::uint64_t first = plan->primes[begin];
    if (rem < BigInt(from_u64(first)) * from_u64(first)) break;
    const std::uint64_t residue = mpz_fdiv_ui(rem.get_mpz_t(), product);
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint32_t p = plan->primes[i];
      if (residue % p != 0) continue;
      const int e = remove_factor(rem, p);
      out.factors.push_back({BigInt(p), e, Certainty::Proven});
    }
    begin = end;
  }
  if (rem > 1 && rem <= BigInt(from_u64(budget.trial_bound)) * budget.trial_bound &&
      primality(rem, 0) == Primality::ProvenPrime) {
    // Below B^2 with no factor up to B (or up to sqrt): prime by trial division.
    out.factors.push_back({rem, 1, Certainty::Proven});
    rem = 1;
  }

  std::vector<PrimePower> large;
  std::vector<BigInt> unresolved;
  std::vector<BigInt> stack;
  if (rem > 1) stack.push_back(rem);
  auto strip_known = [&](BigInt& x) {
    for (const auto& pp : large) remove_factor(x, pp.prime);
  };
  while (!stack.empty()) {
    BigInt x = std::move(stack.back());
    stack.pop_back();
    strip_known(x);
    if (x == 1) continue;
    const Primality pr = primality(x, budget.primality_rounds);
    if (pr != Primality::Composite) {
      large.push_back({x, 0, pr == Primality::ProvenPrime ? Certainty::Proven : Certainty::Probable});
      continue;
    }
    if (mpz_perfect_power_p(x.get_mpz_t())) {
      for (unsigned long k = 2; k <= bit_length(x); ++k) {
        BigInt root;
        if (mpz_root(root.get_mpz_t(), x.get_mpz_t(), k) != 0) {
          stack.push_back(root);
          break;
        }
      }
      continue;
    }
    BigInt d = split(x, budget);
    if (d == 0) {
      unresolved.push_back(std::move(x));
      continue;
    }
    BigInt other = x / d;
    stack.push_back(std::move(d));
    stack.push_back(std::move(other));
  }
  // Primes found late may still divide pieces set aside earlier.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<BigInt> next;
    for (auto& x : unresolved) {
      const BigInt before = x;
      strip_known(x);
      if (x != before) changed = true;
      if (x == 1) continue;
      if (x != before) {
        const Primality pr = primality(x, budget.primality_rounds);
        if (pr != Primality::Composite) {
          large.push_back({x, 0, pr == Primality::ProvenPrime ? Certainty::Proven : Certainty::Probable});
          continue;
        }
      }
      next.push_back(std::move(x));
    }
    unresolved = std::move(next);
  }
  for (auto& pp : large) {
    pp.exponent = remove_factor(rem, pp.prime);
    if (pp.exponent > 0) out.factors.push_back(pp);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  out.cofactor = rem;
  out.cofactor_status = rem == 1 ? CofactorStatus::One : CofactorStatus::Composite;
  return out;
}

PhiSigmaBounds phi_sigma_bounds(const FactorResult& f) {
  Rational phi_known(1), sigma_known(1);
  for (const auto& pp : f.factors) {
    BigInt pe_minus, pe, pe_plus;
    mpz_pow_ui(pe_minus.get_mpz_t(), pp.prime.get_mpz_t(), static_cast<unsigned long>(pp.exponent - 1));
    pe = pe_minus * pp.prime;
    pe_plus = pe * pp.prime;
    phi_known *= Rational(pe - pe_minus);
    // sigma(p^e) = (p^{e+1} - 1) / (p - 1)
    BigInt s = (pe_plus - 1) / (pp.prime - 1);
    sigma_known *= Rational(s);
  }
  PhiSigmaBounds out;
  const Rational c(f.cofactor);
  out.phi_high = phi_known * c;
  out.sigma_low = sigma_known * c;
  if (f.cofactor == 1) {
    out.phi_low = out.phi_high;
    out.sigma_high = out.sigma_low;
  } else {
    // C has at most t prime factors, each above B, where B^t >= C.
    const BigInt bound = from_u64(f.trial_bound);
    unsigned long t = 0;
    BigInt power = 1;
    while (power < f.cofactor) {
      power *= bound;
      ++t;
    }
    Rational shrink(bound - 1, bound);
    Rational grow(bound, bound - 1);
    Rational shrink_t(1), grow_t(1);
    mpz_pow_ui(shrink_t.get_num_mpz_t(), shrink.get_num_mpz_t(), t);
    mpz_pow_ui(shrink_t.get_den_mpz_t(), shrink.get_den_mpz_t(), t);
    mpz_pow_ui(grow_t.get_num_mpz_t(), grow.get_num_mpz_t(), t);
    mpz_pow_ui(grow_t.get_den_mpz_t(), grow.get_den_mpz_t(), t);
    shrink_t.canonicalize();
    grow_t.canonicalize();
    out.phi_low = out.phi_high * shrink_t;
    out.sigma_high = out.sigma_low * grow_t;
  }
  if (out.phi_low < 1) out.phi_low = 1;
  out.exact = f.exact();
  return out;
}

std::optional<BigInt> tau_from_factors(const FactorResult& f) {
  if (!f.exact()) return std::nullopt;
  BigInt tau = 1;
  for (const auto& pp : f.factors) tau *= pp.exponent + 1;
  return tau;
}

Rational phi_upper_from_divisors(const BigInt& m, std::span<const std::uint64_t> primes) {
  if (m < 1) throw ValidationError("phi_upper_from_divisors expects m >= 1");
  std::vector<std::uint64_t> distinct(primes.begin(), primes.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Rational bound(m);
  for (std::uint64_t q : distinct) {
    if (!is_prime_u64(q)) throw ValidationError("phi_upper_from_divisors: " + std::to_string(q) + " is not prime");
    if (!mpz_divisible_p(m.get_mpz_t(), from_u64(q).get_mpz_t())) {
      throw ValidationError("phi_upper_from_divisors: " + std::to_string(q) + " does not divide m");
    }
    bound *= Rational(from_u64(q - 1), from_u64(q));
  }
  bound.canonicalize();
  return bound;
}

std::string format_factor_result(const FactorResult& f) {
  nlohmann::ordered_json doc;
  doc["m"] = to_decimal(f.m);
  doc["trial_bound"] = f.trial_bound;
  doc["factors"] = nlohmann::ordered_json::array();
  for (const auto& pp : f.factors) {
    doc["factors"].push_back({{"p", to_decimal(pp.prime)}, {"e", pp.exponent}, {"certainty", to_string(pp.certainty)}});
  }
  doc["cofactor"] = to_decimal(f.cofactor);
  doc["cofactor_status"] = f.complete() ? "ONE" : "COMPOSITE";
  return doc.dump(2);
}

}  // namespace lrslab
