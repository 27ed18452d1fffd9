#include "lrslab/inequality.hpp"

#include <chrono>
#include <cmath>

#include "lrslab/errors.hpp"
#include "lrslab/parallel.hpp"
#include "lrslab/primes.hpp"

namespace lrslab {

const char* to_string(InequalityKind k) { return k == InequalityKind::Phi ? "PHI" : "SIGMA"; }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Fails: return "FAILS";
    case Verdict::Undecided: return "UNDECIDED";
    case Verdict::SkippedZero: return "SKIPPED_ZERO";
  }
  return "?";
}

InequalityKind parse_kind(const std::string& text) {
  if (text == "phi" || text == "PHI") return InequalityKind::Phi;
  if (text == "sigma" || text == "SIGMA") return InequalityKind::Sigma;
  throw ValidationError("unknown inequality kind '" + text + "' (expected phi or sigma)");
}

namespace {

std::uint64_t index_for(std::int64_t n, InequalityKind kind) {
  if (n < 1) throw ValidationError("index n must be >= 1");
  const auto un = static_cast<std::uint64_t>(n);
  return kind == InequalityKind::Phi ? euler_phi_u64(un) : sigma_u64(un);
}

// One factorization attempt; returns true when the verdict is HOLDS or FAILS.
bool attempt(TrialOutcome& out, const BigInt& m, const FactorBudget& budget) {
  const FactorResult f = factor(m, budget);
  const PhiSigmaBounds b = phi_sigma_bounds(f);
  // Inward rounding keeps the enclosure valid since phi and sigma are integers.
  if (out.kind == InequalityKind::Phi) {
    out.lhs_low = ceil_of(b.phi_low);
    out.lhs_high = floor_of(b.phi_high);
    if (out.lhs_high < out.rhs) {
      out.verdict = Verdict::Fails;
    } else if (out.lhs_low >= out.rhs) {
      out.verdict = Verdict::Holds;
    } else {
      out.verdict = Verdict::Undecided;
    }
  } else {
    out.lhs_low = ceil_of(b.sigma_low);
    out.lhs_high = floor_of(b.sigma_high);
    if (out.lhs_high <= out.rhs) {
      out.verdict = Verdict::Holds;
    } else if (out.lhs_low > out.rhs) {
      out.verdict = Verdict::Fails;
    } else {
      out.verdict = Verdict::Undecided;
    }
  }
  out.probable_used = f.uses_probable();
  out.notes.clear();
  if (out.probable_used) {
    out.notes = "probable primes:";
    for (const auto& pp : f.factors) {
      if (pp.certainty == Certainty::Probable) out.notes += " " + to_decimal(pp.prime);
    }
  }
  if (!f.complete()) {
    if (!out.notes.empty()) out.notes += "; ";
    out.notes += "cofactor of " + std::to_string(bit_length(f.cofactor)) + " bits";
  }
  if (budget.strict && out.probable_used && out.verdict != Verdict::Undecided) {
    out.verdict = Verdict::Undecided;
    out.notes += "; strict mode";
  }
  return out.verdict != Verdict::Undecided;
}

}  // namespace

TrialOutcome classify_values(std::int64_t n, InequalityKind kind, std::uint64_t index_value,
                             const BigInt& u_n, const BigInt& u_index, const FactorBudget& budget) {
  budget.validate();
  TrialOutcome out;
  out.n = n;
  out.kind = kind;
  out.index_value = index_value;
  out.rhs = abs(u_index);
  if (u_n == 0) {
    out.verdict = Verdict::SkippedZero;
    out.lhs_low = 0;
    out.lhs_high = 0;
    return out;
  }
  const BigInt m = abs(u_n);
  // Trial division alone settles most indices; rho only runs when it does not.
  FactorBudget cheap = budget;
  cheap.rho_iterations = 0;
  if (attempt(out, m, cheap) || budget.rho_iterations == 0) return out;
  attempt(out, m, budget);
  return out;
}

TrialOutcome classify(const RecurrenceSpec& spec, std::int64_t n, InequalityKind kind,
                      const ClassifyOptions& options) {
  const std::uint64_t idx = index_for(n, kind);
  const BigInt u_n = term(spec, n, options.bit_budget).value;
  const BigInt u_idx = term(spec, static_cast<std::int64_t>(idx), options.bit_budget).value;
  return classify_values(n, kind, idx, u_n, u_idx, options.budget);
}

TrialOutcome classify_phi(const RecurrenceSpec& spec, std::int64_t n, const ClassifyOptions& options) {
  return classify(spec, n, InequalityKind::Phi, options);
}

TrialOutcome classify_sigma(const RecurrenceSpec& spec, std::int64_t n, const ClassifyOptions& options) {
  return classify(spec, n, InequalityKind::Sigma, options);
}

CensusReport census(const RecurrenceSpec& spec, std::int64_t x, InequalityKind kind,
                    const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  spec.validate();
  options.classify.budget.validate();
  if (x < 10) throw ValidationError("census needs x >= 10");
  if (!options.allow_degenerate) {
    const DegeneracyReport d = degeneracy_check(char_poly(spec));
    if (d.polynomial_type) {
      throw ValidationError("characteristic polynomial is (X-1)^k or (X+1)^k; pass the override to run anyway");
    }
    if (!d.nondegenerate) throw ValidationError("sequence is degenerate; pass the override to run anyway");
  }

  std::vector<std::uint64_t> idx(static_cast<std::size_t>(x));
  std::uint64_t need = 0;
  for (std::int64_t n = 1; n <= x; ++n) {
    idx[static_cast<std::size_t>(n - 1)] = index_for(n, kind);
    need = std::max<std::uint64_t>({need, idx[static_cast<std::size_t>(n - 1)], static_cast<std::uint64_t>(n)});
  }
  // Terms past the bit budget are left out; indices needing them are errored.
  std::vector<BigInt> values;
  try {
    values = terms_up_to(spec, static_cast<std::int64_t>(need), options.classify.bit_budget);
  } catch (const ResourceError&) {
    values.clear();
    for (std::int64_t step = static_cast<std::int64_t>(need) / 2; step >= 1; step /= 2) {
      try {
        values = terms_up_to(spec, step, options.classify.bit_budget);
        break;
      } catch (const ResourceError&) {
      }
    }
  }

  CensusReport report;
  report.x = x;
  report.kind = kind;
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(x));
  std::vector<std::string> errors(static_cast<std::size_t>(x));
  parallel_for(static_cast<std::size_t>(x), options.threads, [&](std::size_t i) {
    const std::uint64_t n = i + 1;
    const std::uint64_t k = idx[i];
    if (std::max(n, k) > values.size()) {
      errors[i] = "term U_" + std::to_string(std::max(n, k)) + " exceeds the bit budget";
      return;
    }
    outcomes[i] = classify_values(static_cast<std::int64_t>(n), kind, k, values[n - 1], values[k - 1],
                                  options.classify.budget);
  });

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto n = static_cast<std::int64_t>(i + 1);
    if (!errors[i].empty()) {
      report.errored.emplace_back(n, errors[i]);
      continue;
    }
    const TrialOutcome& o = outcomes[i];
    switch (o.verdict) {
      case Verdict::Holds: ++report.holds; break;
      case Verdict::Fails:
        ++report.fails;
        report.exceptional_indices.push_back(n);
        if (is_prime_u64(static_cast<std::uint64_t>(n))) report.prime_failures.push_back(n);
        break;
      case Verdict::Undecided:
        ++report.undecided;
        report.undecided_indices.push_back(n);
        break;
      case Verdict::SkippedZero: ++report.skipped_zero; break;
    }
    if (o.probable_used) ++report.probable_used;
    report.outcomes.push_back(std::move(outcomes[i]));
  }
  const double xd = static_cast<double>(x);
  report.ratio = static_cast<double>(report.fails) / (xd / std::log(xd));
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SmallValueReport small_value_census(const RecurrenceSpec& spec, std::int64_t x, const Rational& c,
                                    int precision_bits) {
  spec.validate();
  if (x < 1) throw ValidationError("small_value_census needs x >= 1");
  if (c <= 0 || c >= Rational(1, 3)) throw ValidationError("c must lie strictly between 0 and 1/3");
  if (precision_bits < 16) throw ValidationError("precision must be at least 16 bits");
  const CharPoly cp = char_poly(spec);
  RootData rd = roots(cp, precision_bits);
  if (rd.distinct_count < 2) {
    throw ValidationError("small_value_census needs at least two distinct characteristic roots");
  }

  SmallValueReport report;
  report.x = x;
  report.c = c;
  const std::vector<BigInt> values = terms_up_to(spec, x);
  std::vector<std::int64_t> pending;
  for (std::int64_t n = 1; n <= x; ++n) {
    if (values[static_cast<std::size_t>(n - 1)] == 0) {
      report.zero_terms.push_back(n);
    } else {
      pending.push_back(n);
    }
  }

  for (int prec = precision_bits;; prec *= 2) {
    if (prec != precision_bits) rd = roots(cp, prec);
    report.precision_bits = prec;
    const mpfr_prec_t wp = prec + 32;
    const RealInterval log_alpha =
        RealInterval::between(rd.dominant_modulus.lo, rd.dominant_modulus.hi, wp).log();
    const RealInterval delta = RealInterval::log_abs(from_u64(static_cast<std::uint64_t>(x)), wp).scaled(-c).exp();
    report.delta = delta.midpoint();
    const RealInterval keep = RealInterval::point(Rational(1), wp) - delta;
    std::vector<std::int64_t> still;
    for (std::int64_t n : pending) {
      const RealInterval t = keep.scaled(Rational(n)) * log_alpha;
      const LogComparison cmp = log_compare(values[static_cast<std::size_t>(n - 1)], t.lo.to_rational(),
                                            t.hi.to_rational(), 2 * prec);
      if (cmp == LogComparison::Below) {
        report.indices.push_back(n);
      } else if (cmp == LogComparison::Undecided) {
        still.push_back(n);
      }
    }
    pending = std::move(still);
    if (pending.empty() || prec * 2 > kMaxRootPrecisionBits) break;
  }
  std::sort(report.indices.begin(), report.indices.end());
  report.undecided = pending;
  report.size_constant = static_cast<double>(report.indices.size()) / std::sqrt(static_cast<double>(x));
  return report;
}

}  // namespace lrslab
