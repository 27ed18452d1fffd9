#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "lrslab/bigint.hpp"
#include "lrslab/mpfr_real.hpp"
#include "lrslab/poly.hpp"

namespace lrslab {

inline constexpr std::size_t kDefaultTermBitBudget = 10'000'000;
inline constexpr int kMaxRootPrecisionBits = 4096;

// U_{n+k} = a_1 U_{n+k-1} + ... + a_k U_n with initial terms U_1..U_k.
// Indices start at 1; a sequence usually written from U_0 is encoded by
// shifting, with the shift noted in the label.
struct RecurrenceSpec {
  std::vector<BigInt> coeffs;   // a_1..a_k
  std::vector<BigInt> initial;  // U_1..U_k
  std::string label;

  int order() const { return static_cast<int>(coeffs.size()); }
  // Throws ValidationError unless k >= 1, both lists have k entries and a_k != 0.
  void validate() const;
};

// Psi(X) = X^k - a_1 X^{k-1} - ... - a_k.
struct CharPoly {
  IntPoly poly;

  int degree() const { return poly.degree(); }
  // Throws ValidationError unless monic with nonzero constant term.
  void validate() const;
};

struct ModulusInterval {
  Rational lo;
  Rational hi;

  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

struct RootInfo {
  ModulusInterval modulus;
  bool is_real = false;
  int multiplicity = 1;
  std::complex<double> approx;
};

// Distinct characteristic roots with certified moduli, sorted by decreasing
// modulus; roots[0] is a dominant root.
struct RootData {
  int distinct_count = 0;
  std::vector<RootInfo> roots;
  ModulusInterval dominant_modulus;
  int precision_bits = 0;
};

struct DegeneracyWitness {
  int i;  // indices into DegeneracyReport::approx_roots
  int j;
  int order;  // alpha_i / alpha_j is a primitive order-th root of unity
};

struct DegeneracyReport {
  bool nondegenerate = true;
  std::vector<DegeneracyWitness> witnesses;
  bool polynomial_type = false;
  std::vector<std::complex<double>> approx_roots;
};

struct TermValue {
  std::int64_t n = 0;
  BigInt value;
  // ln|U_n| and an absolute error bound; meaningful only when has_log.
  double log_abs = 0.0;
  double log_error = 0.0;
  bool has_log = false;
};

enum class LogComparison { Below, Above, Undecided };

const char* to_string(LogComparison c);

CharPoly char_poly(const RecurrenceSpec& spec);
// Inverse of char_poly: coefficients a_1..a_k read back from Psi.
std::vector<BigInt> recurrence_coeffs(const CharPoly& cp);

// Exact U_n by stepping the recurrence.
BigInt term_iterative(const RecurrenceSpec& spec, std::int64_t n,
                      std::size_t bit_budget = kDefaultTermBitBudget);
// Exact U_n from a power of the companion matrix.
BigInt term_matrix(const RecurrenceSpec& spec, std::int64_t n,
                   std::size_t bit_budget = kDefaultTermBitBudget);
// U_1..U_count (index i-1 holds U_i). Throws ResourceError past the budget.
std::vector<BigInt> terms_up_to(const RecurrenceSpec& spec, std::int64_t count,
                                std::size_t bit_budget = kDefaultTermBitBudget);

TermValue term(const RecurrenceSpec& spec, std::int64_t n,
               std::size_t bit_budget = kDefaultTermBitBudget);

RootData roots(const CharPoly& cp, int precision_bits, int max_precision_bits = kMaxRootPrecisionBits);

DegeneracyReport degeneracy_check(const CharPoly& cp);

std::vector<std::int64_t> zero_census(const RecurrenceSpec& spec, std::int64_t n_max);

// Compares ln|value| against [threshold_lo, threshold_hi], refining the
// logarithm up to max_precision_bits before reporting Undecided.
LogComparison log_compare(const BigInt& value, const Rational& threshold_lo,
                          const Rational& threshold_hi,
                          int max_precision_bits = kMaxRootPrecisionBits);

LogComparison term_log_compare(const RecurrenceSpec& spec, std::int64_t n,
                               const Rational& threshold_lo, const Rational& threshold_hi);

}  // namespace lrslab
