#include "lrslab/forge.hpp"

#include <numeric>

#include <json.hpp>

#include "lrslab/errors.hpp"
#include "lrslab/factor.hpp"
#include "lrslab/primes.hpp"

namespace lrslab {

namespace {

void validate_qs(const std::vector<std::uint64_t>& qs) {
  if (qs.empty()) throw ValidationError("qs must not be empty");
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i] % 2 == 0 || !is_prime_u64(qs[i])) {
      throw ValidationError("q = " + std::to_string(qs[i]) + " is not an odd prime");
    }
    if (i > 0 && qs[i] <= qs[i - 1]) throw ValidationError("qs must be strictly increasing");
  }
}

BigInt two_pow(std::uint64_t e) {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return v;
}

bool divides_two_pow_minus(std::uint64_t q, std::uint64_t p, const BigInt& a) {
  BigInt r;
  const BigInt qq = from_u64(q);
  mpz_powm(r.get_mpz_t(), BigInt(2).get_mpz_t(), from_u64(p).get_mpz_t(), qq.get_mpz_t());
  BigInt am;
  mpz_mod(am.get_mpz_t(), a.get_mpz_t(), qq.get_mpz_t());
  return r == am;
}

}  // namespace

HarmonicCheck harmonic_check(const std::vector<std::uint64_t>& qs) {
  validate_qs(qs);
  HarmonicCheck out;
  out.sum = 0;
  for (auto q : qs) out.sum += Rational(1, from_u64(q));
  out.sum.canonicalize();
  out.exceeds_one = out.sum > 1;
  return out;
}

BigInt build_a(const std::vector<std::uint64_t>& qs, std::uint64_t offset) {
  validate_qs(qs);
  BigInt product = 1;
  for (auto q : qs) product *= from_u64(q);
  return 2 + product * (from_u64(offset) + 1);
}

std::uint64_t lcm_modulus(const std::vector<std::uint64_t>& qs) {
  validate_qs(qs);
  std::uint64_t l = 1;
  for (auto q : qs) {
    const std::uint64_t g = std::gcd(l, q - 1);
    const unsigned __int128 next = static_cast<unsigned __int128>(l / g) * (q - 1);
    if (next >> 64) throw ResourceError("lcm of q - 1 overflows 64 bits");
    l = static_cast<std::uint64_t>(next);
  }
  return l;
}

std::uint64_t find_prime_p(const std::vector<std::uint64_t>& qs, std::uint64_t start,
                           std::uint64_t search_limit) {
  if (start < 2) throw ValidationError("prime search must start at 2 or above");
  const std::uint64_t l = lcm_modulus(qs);
  std::uint64_t c = start + (l + 1 - start % l) % l;
  for (; c <= search_limit; c += l) {
    if (is_prime_u64(c)) return c;
    if (c > UINT64_MAX - l) break;
  }
  throw ResourceError("no prime p = 1 mod " + std::to_string(l) + " in [" + std::to_string(start) + ", " +
                      std::to_string(search_limit) + "]");
}

Certificate certify(const std::vector<std::uint64_t>& qs, const BigInt& a, std::uint64_t p) {
  const HarmonicCheck hc = harmonic_check(qs);
  if (a <= 2) throw ValidationError("a must exceed 2");
  if (!is_prime_u64(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  const BigInt m = two_pow(p) - a;
  if (m <= 0) throw ValidationError("2^p must exceed a");
  Certificate cert;
  cert.qs = qs;
  cert.a = a;
  cert.modulus = lcm_modulus(qs);
  cert.p = p;
  cert.facts.push_back({"harmonic sum > 1", hc.exceeds_one, "sum 1/q = " + to_string(hc.sum)});
  cert.facts.push_back({"p = 1 mod L", p % cert.modulus == 1,
                        "p mod " + std::to_string(cert.modulus) + " = " + std::to_string(p % cert.modulus)});

  bool all_divide = true;
  for (auto q : qs) {
    const bool ok = divides_two_pow_minus(q, p, a);
    all_divide = all_divide && ok;
    cert.facts.push_back({"(i) " + std::to_string(q) + " divides 2^p - a", ok, ""});
  }

  const BigInt rhs = two_pow(p - 1) - a;
  BigInt num = 1, den = 1;
  for (auto q : qs) {
    num *= from_u64(q - 1);
    den *= from_u64(q);
  }
  const bool product_ok = m * num < rhs * den;
  cert.facts.push_back({"(ii) (2^p - a) prod(1 - 1/q) < 2^(p-1) - a", product_ok,
                        "prod(1 - 1/q) = " + to_string(Rational(num, den))});

  bool bound_ok = false;
  std::string detail = "needs (i)";
  if (all_divide) {
    const Rational upper = phi_upper_from_divisors(m, qs);
    bound_ok = upper < Rational(rhs);
    detail = "phi(2^p - a) <= (2^p - a) prod(1 - 1/q)";
  }
  cert.facts.push_back({"(iii) phi(2^p - a) < 2^phi(p) - a", bound_ok, detail});

  cert.accepted = true;
  for (const auto& f : cert.facts) {
    if (!f.ok) {
      cert.accepted = false;
      cert.reason = f.name + " fails";
      if (!f.detail.empty()) cert.reason += " (" + f.detail + ")";
      break;
    }
  }
  return cert;
}

Certificate run_forge(const ForgeConfig& config) {
  const HarmonicCheck hc = harmonic_check(config.qs);
  const BigInt a = build_a(config.qs, config.offset);
  if (!hc.exceeds_one) {
    Certificate cert;
    cert.qs = config.qs;
    cert.a = a;
    cert.modulus = lcm_modulus(config.qs);
    cert.facts.push_back({"harmonic sum > 1", false, "sum 1/q = " + to_string(hc.sum)});
    cert.reason = "harmonic sum " + to_string(hc.sum) + " <= 1";
    return cert;
  }
  // 2^p > a as soon as p reaches the bit length of a.
  std::uint64_t start = std::max<std::uint64_t>(2, bit_length(a));
  for (;;) {
    const std::uint64_t p = find_prime_p(config.qs, start, config.search_limit);
    Certificate cert = certify(config.qs, a, p);
    bool product_failed = false;
    for (const auto& f : cert.facts) {
      if (f.name.rfind("(ii)", 0) == 0 && !f.ok) product_failed = true;
    }
    if (cert.accepted || !product_failed) return cert;
    start = p + 1;
  }
}

std::string format_certificate(const Certificate& cert) {
  nlohmann::ordered_json doc;
  doc["qs"] = cert.qs;
  doc["a"] = to_decimal(cert.a);
  doc["L"] = cert.modulus;
  doc["p"] = cert.p;
  doc["facts"] = nlohmann::ordered_json::array();
  for (const auto& f : cert.facts) {
    doc["facts"].push_back({{"fact", f.name}, {"ok", f.ok}, {"detail", f.detail}});
  }
  doc["result"] = cert.accepted ? "ACCEPT" : "REJECT";
  doc["reason"] = cert.reason;
  return doc.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    Certificate cert;
    cert.qs = doc.at("qs").get<std::vector<std::uint64_t>>();
    cert.a = parse_bigint(doc.at("a").get<std::string>());
    cert.modulus = doc.at("L").get<std::uint64_t>();
    cert.p = doc.at("p").get<std::uint64_t>();
    for (const auto& f : doc.at("facts")) {
      cert.facts.push_back({f.at("fact").get<std::string>(), f.at("ok").get<bool>(),
                            f.value("detail", std::string())});
    }
    cert.accepted = doc.at("result").get<std::string>() == "ACCEPT";
    cert.reason = doc.value("reason", std::string());
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed certificate: ") + e.what());
  }
}

VerifyResult verify_certificate(const Certificate& cert) {
  auto reject = [](std::string why) { return VerifyResult{false, std::move(why)}; };
  if (!cert.accepted) return reject("certificate records REJECT: " + cert.reason);
  if (cert.qs.empty()) return reject("no primes q listed");
  Rational harmonic = 0;
  std::uint64_t l = 1;
  for (std::size_t i = 0; i < cert.qs.size(); ++i) {
    const std::uint64_t q = cert.qs[i];
    if (q % 2 == 0 || !is_prime_u64(q)) return reject(std::to_string(q) + " is not an odd prime");
    if (i > 0 && q <= cert.qs[i - 1]) return reject("qs not strictly increasing");
    harmonic += Rational(1, from_u64(q));
    l = std::lcm(l, q - 1);
  }
  if (harmonic <= 1) return reject("harmonic sum is not above 1");
  if (l != cert.modulus) return reject("L does not equal lcm(q - 1)");
  if (!is_prime_u64(cert.p)) return reject("p is not prime");
  if (cert.p % l != 1) return reject("p is not 1 mod L");
  if (cert.a <= 2) return reject("a must exceed 2");

  BigInt two_p;
  mpz_ui_pow_ui(two_p.get_mpz_t(), 2, static_cast<unsigned long>(cert.p));
  const BigInt m = two_p - cert.a;
  if (m <= 0) return reject("2^p does not exceed a");
  for (auto q : cert.qs) {
    BigInt r;
    mpz_mod_ui(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(q));
    if (r != 0) return reject("fact (i) fails: " + std::to_string(q) + " does not divide 2^p - a");
  }
  const BigInt rhs = two_p / 2 - cert.a;
  BigInt lhs = m, right = rhs;
  for (auto q : cert.qs) {
    lhs *= from_u64(q - 1);
    right *= from_u64(q);
  }
  if (!(lhs < right)) return reject("fact (ii) fails: (2^p - a) prod(1 - 1/q) >= 2^(p-1) - a");
  for (const auto& f : cert.facts) {
    if (!f.ok) return reject("recorded fact marked false: " + f.name);
  }
  return {true, "all facts re-derived"};
}

}  // namespace lrslab
