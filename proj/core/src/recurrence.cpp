#include "lrslab/recurrence.hpp"

#include <cmath>

#include "lrslab/errors.hpp"

namespace lrslab {

void RecurrenceSpec::validate() const {
  if (coeffs.empty()) throw ValidationError("recurrence order must be at least 1");
  if (initial.size() != coeffs.size()) {
    throw ValidationError("recurrence needs exactly " + std::to_string(coeffs.size()) +
                          " initial terms, got " + std::to_string(initial.size()));
  }
  if (coeffs.back() == 0) throw ValidationError("last recurrence coefficient a_k must be nonzero");
}

void CharPoly::validate() const {
  if (poly.degree() < 1) throw ValidationError("characteristic polynomial must have degree >= 1");
  if (poly.leading() != 1) throw ValidationError("characteristic polynomial must be monic");
  if (poly[0] == 0) throw ValidationError("characteristic polynomial has a zero root");
}

const char* to_string(LogComparison c) {
  switch (c) {
    case LogComparison::Below: return "BELOW";
    case LogComparison::Above: return "ABOVE";
    case LogComparison::Undecided: return "UNDECIDED";
  }
  return "?";
}

CharPoly char_poly(const RecurrenceSpec& spec) {
  spec.validate();
  const int k = spec.order();
  std::vector<BigInt> c(static_cast<std::size_t>(k) + 1);
  c[static_cast<std::size_t>(k)] = 1;
  for (int i = 1; i <= k; ++i) c[static_cast<std::size_t>(k - i)] = -spec.coeffs[static_cast<std::size_t>(i - 1)];
  return CharPoly{IntPoly(std::move(c))};
}

std::vector<BigInt> recurrence_coeffs(const CharPoly& cp) {
  cp.validate();
  const int k = cp.degree();
  std::vector<BigInt> a(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) a[static_cast<std::size_t>(i - 1)] = -cp.poly[static_cast<std::size_t>(k - i)];
  return a;
}

namespace {

void check_index(std::int64_t n) {
  if (n < 1) throw ValidationError("term index must be >= 1, got " + std::to_string(n));
}

void check_budget(const BigInt& v, std::size_t bit_budget, std::int64_t n) {
  if (bit_length(v) > bit_budget) {
    throw ResourceError("term U_" + std::to_string(n) + " exceeds the bit budget of " +
                        std::to_string(bit_budget) + " bits");
  }
}

using Matrix = std::vector<std::vector<BigInt>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t k = a.size();
  Matrix out(k, std::vector<BigInt>(k, BigInt(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        mpz_addmul(out[i][j].get_mpz_t(), a[i][l].get_mpz_t(), b[l][j].get_mpz_t());
      }
    }
  }
  return out;
}

std::size_t max_bits(const Matrix& m) {
  std::size_t best = 0;
  for (const auto& row : m) {
    for (const auto& v : row) best = std::max(best, bit_length(v));
  }
  return best;
}

}  // namespace

BigInt term_iterative(const RecurrenceSpec& spec, std::int64_t n, std::size_t bit_budget) {
  spec.validate();
  check_index(n);
  const int k = spec.order();
  if (n <= k) return spec.initial[static_cast<std::size_t>(n - 1)];
  // Ring buffer holding U_{i-k+1}..U_i.
  std::vector<BigInt> window = spec.initial;
  std::size_t oldest = 0;
  BigInt next;
  for (std::int64_t i = k + 1; i <= n; ++i) {
    next = 0;
    for (int j = 1; j <= k; ++j) {
      // U_{i-j} sits at (oldest + k - j) mod k.
      const std::size_t pos = (oldest + static_cast<std::size_t>(k - j)) % static_cast<std::size_t>(k);
      mpz_addmul(next.get_mpz_t(), spec.coeffs[static_cast<std::size_t>(j - 1)].get_mpz_t(),
                 window[pos].get_mpz_t());
    }
    check_budget(next, bit_budget, i);
    window[oldest] = next;
    oldest = (oldest + 1) % static_cast<std::size_t>(k);
  }
  return next;
}

BigInt term_matrix(const RecurrenceSpec& spec, std::int64_t n, std::size_t bit_budget) {
  spec.validate();
  check_index(n);
  const std::size_t k = static_cast<std::size_t>(spec.order());
  if (n <= static_cast<std::int64_t>(k)) return spec.initial[static_cast<std::size_t>(n - 1)];
  // State (U_{m+k-1}, ..., U_m) advances by the companion matrix.
  Matrix companion(k, std::vector<BigInt>(k, BigInt(0)));
  for (std::size_t j = 0; j < k; ++j) companion[0][j] = spec.coeffs[j];
  for (std::size_t i = 1; i < k; ++i) companion[i][i - 1] = 1;
  Matrix power(k, std::vector<BigInt>(k, BigInt(0)));
  for (std::size_t i = 0; i < k; ++i) power[i][i] = 1;
  std::uint64_t e = static_cast<std::uint64_t>(n) - k;
  Matrix base = companion;
  while (e > 0) {
    if (e & 1) {
      power = multiply(power, base);
      if (max_bits(power) > bit_budget + 64) {
        throw ResourceError("term U_" + std::to_string(n) + " exceeds the bit budget of " +
                            std::to_string(bit_budget) + " bits");
      }
    }
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  BigInt out = 0;
  for (std::size_t j = 0; j < k; ++j) {
    mpz_addmul(out.get_mpz_t(), power[0][j].get_mpz_t(), spec.initial[k - 1 - j].get_mpz_t());
  }
  check_budget(out, bit_budget, n);
  return out;
}

std::vector<BigInt> terms_up_to(const RecurrenceSpec& spec, std::int64_t count, std::size_t bit_budget) {
  spec.validate();
  std::vector<BigInt> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  const int k = spec.order();
  for (std::int64_t i = 1; i <= count; ++i) {
    if (i <= k) {
      out.push_back(spec.initial[static_cast<std::size_t>(i - 1)]);
      continue;
    }
    BigInt next = 0;
    for (int j = 1; j <= k; ++j) {
      mpz_addmul(next.get_mpz_t(), spec.coeffs[static_cast<std::size_t>(j - 1)].get_mpz_t(),
                 out[static_cast<std::size_t>(i - 1 - j)].get_mpz_t());
    }
    check_budget(next, bit_budget, i);
    out.push_back(std::move(next));
  }
  return out;
}

TermValue term(const RecurrenceSpec& spec, std::int64_t n, std::size_t bit_budget) {
  TermValue out;
  out.n = n;
  // Stepping is cheaper until the matrix power's log n squarings win.
  out.value = n <= 256 * std::max(1, spec.order()) ? term_iterative(spec, n, bit_budget)
                                                   : term_matrix(spec, n, bit_budget);
  if (out.value != 0) {
    RealInterval lg = RealInterval::log_abs(out.value, 128);
    out.log_abs = lg.midpoint();
    out.log_error = lg.width() / 2 + std::abs(out.log_abs) * 0x1p-52;
    out.has_log = true;
  }
  return out;
}

std::vector<std::int64_t> zero_census(const RecurrenceSpec& spec, std::int64_t n_max) {
  if (n_max < 1) throw ValidationError("zero_census needs n_max >= 1");
  spec.validate();
  std::vector<std::int64_t> zeros;
  const std::vector<BigInt> values = terms_up_to(spec, n_max);
  for (std::int64_t i = 0; i < n_max; ++i) {
    if (values[static_cast<std::size_t>(i)] == 0) zeros.push_back(i + 1);
  }
  return zeros;
}

LogComparison log_compare(const BigInt& value, const Rational& threshold_lo,
                          const Rational& threshold_hi, int max_precision_bits) {
  if (value == 0) throw ValidationError("log_compare: the term is zero");
  if (threshold_hi < threshold_lo) throw ValidationError("log_compare: empty threshold interval");
  for (int prec = 64; prec <= max_precision_bits; prec *= 2) {
    const RealInterval lg = RealInterval::log_abs(value, prec);
    if (mpfr_cmp_q(lg.lo.get(), threshold_hi.get_mpq_t()) > 0) return LogComparison::Above;
    if (mpfr_cmp_q(lg.hi.get(), threshold_lo.get_mpq_t()) < 0) return LogComparison::Below;
    // Once the bracket sits inside the threshold, more bits cannot help.
    if (mpfr_cmp_q(lg.lo.get(), threshold_lo.get_mpq_t()) >= 0 &&
        mpfr_cmp_q(lg.hi.get(), threshold_hi.get_mpq_t()) <= 0) {
      break;
    }
  }
  return LogComparison::Undecided;
}

LogComparison term_log_compare(const RecurrenceSpec& spec, std::int64_t n,
                               const Rational& threshold_lo, const Rational& threshold_hi) {
  const BigInt value = term(spec, n).value;
  if (value == 0) throw ValidationError("term_log_compare: U_" + std::to_string(n) + " is zero");
  return log_compare(value, threshold_lo, threshold_hi);
}

}  // namespace lrslab
