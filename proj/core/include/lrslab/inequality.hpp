#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lrslab/factor.hpp"
#include "lrslab/recurrence.hpp"

namespace lrslab {

// PHI: phi(|U_n|) >= |U_phi(n)|.  SIGMA: sigma(|U_n|) <= |U_sigma(n)|.
enum class InequalityKind { Phi, Sigma };
enum class Verdict { Holds, Fails, Undecided, SkippedZero };

const char* to_string(InequalityKind k);
const char* to_string(Verdict v);
InequalityKind parse_kind(const std::string& text);

struct TrialOutcome {
  std::int64_t n = 0;
  InequalityKind kind = InequalityKind::Phi;
  Verdict verdict = Verdict::Undecided;
  std::uint64_t index_value = 0;  // phi(n) or sigma(n)
  // Integer enclosure of phi(|U_n|) or sigma(|U_n|); zero for SKIPPED_ZERO.
  BigInt lhs_low;
  BigInt lhs_high;
  BigInt rhs;  // |U_phi(n)| or |U_sigma(n)|
  bool probable_used = false;
  std::string notes;
};

struct ClassifyOptions {
  FactorBudget budget;
  std::size_t bit_budget = kDefaultTermBitBudget;
};

TrialOutcome classify_phi(const RecurrenceSpec& spec, std::int64_t n, const ClassifyOptions& options = {});
TrialOutcome classify_sigma(const RecurrenceSpec& spec, std::int64_t n, const ClassifyOptions& options = {});
TrialOutcome classify(const RecurrenceSpec& spec, std::int64_t n, InequalityKind kind,
                      const ClassifyOptions& options = {});

// Classification given |U_n| and |U_index| directly (value may be zero).
TrialOutcome classify_values(std::int64_t n, InequalityKind kind, std::uint64_t index_value,
                             const BigInt& u_n, const BigInt& u_index, const FactorBudget& budget);

struct CensusOptions {
  ClassifyOptions classify;
  unsigned threads = 1;
  // Skip the nondegenerate / non-polynomial precondition.
  bool allow_degenerate = false;
};

struct CensusReport {
  std::int64_t x = 0;
  InequalityKind kind = InequalityKind::Phi;
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::uint64_t undecided = 0;
  std::uint64_t skipped_zero = 0;
  std::uint64_t probable_used = 0;
  std::vector<std::int64_t> exceptional_indices;  // FAILS, ascending
  std::vector<std::int64_t> prime_failures;       // the prime ones among them
  std::vector<std::int64_t> undecided_indices;
  std::vector<std::pair<std::int64_t, std::string>> errored;  // resource errors per index
  double ratio = 0.0;  // fails / (x / log x)
  double elapsed_seconds = 0.0;
  std::vector<TrialOutcome> outcomes;  // one per classified index, ascending
};

CensusReport census(const RecurrenceSpec& spec, std::int64_t x, InequalityKind kind,
                    const CensusOptions& options = {});

struct SmallValueReport {
  std::int64_t x = 0;
  Rational c;
  // delta = x^-c, enclosed.
  double delta = 0.0;
  std::vector<std::int64_t> indices;
  std::vector<std::int64_t> undecided;
  std::vector<std::int64_t> zero_terms;
  int precision_bits = 0;
  // |indices| / sqrt(x)
  double size_constant = 0.0;
};

// n <= x with |U_n| <= |alpha_1|^{n (1 - delta)}, delta = x^-c.
SmallValueReport small_value_census(const RecurrenceSpec& spec, std::int64_t x, const Rational& c,
                                    int precision_bits = 256);

}  // namespace lrslab
