// lrslab: command-line front end for the recurrence / arithmetic-function lab.
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrslab/density.hpp"
#include "lrslab/errors.hpp"
#include "lrslab/forge.hpp"
#include "lrslab/inequality.hpp"
#include "lrslab/report.hpp"
#include "lrslab/sieve.hpp"
#include "lrslab/spec_io.hpp"

namespace fs = std::filesystem;
using namespace lrslab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitResource = 2;
constexpr int kExitReject = 3;

struct Common {
  std::string out_dir = ".";
  unsigned threads = 1;
  bool timestamp = false;
  FactorBudget budget;
};

void add_budget_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--trial-bound", c.budget.trial_bound, "trial division bound B")->capture_default_str();
  cmd->add_option("--rho-iterations", c.budget.rho_iterations, "Pollard-Brent iteration cap per composite")
      ->capture_default_str();
  cmd->add_option("--rounds", c.budget.primality_rounds, "probabilistic primality rounds above 64 bits")
      ->capture_default_str();
  cmd->add_option("--seed", c.budget.seed, "RNG seed, recorded in every report")->capture_default_str();
  cmd->add_flag("--strict", c.budget.strict, "treat verdicts resting on probable primes as UNDECIDED");
}

void add_output_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--threads", c.threads, "worker threads (reports do not depend on it)")->capture_default_str();
  cmd->add_flag("--timestamp", c.timestamp, "add a timestamp and runtimes to report headers");
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ReportHeader header_for(const Common& c, const std::string& command) {
  ReportHeader h;
  h.command = command;
  h.seed = c.budget.seed;
  if (c.timestamp) h.timestamp = utc_now();
  return h;
}

RecurrenceSpec resolve_spec(const std::string& source) {
  if (source == "builtin:fibonacci") return fibonacci_spec();
  if (source == "builtin:n2p1") return n_squared_plus_one_spec();
  if (source == "builtin:lucas") return complex_lucas_spec();
  return load_spec(source);
}

void emit(const Common& c, const std::string& name, const std::string& content) {
  write_text_file(fs::path(c.out_dir) / name, content);
}

SieveConfig sieve_config(const Common& c) {
  SieveConfig cfg;
  cfg.threads = c.threads;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lrslab: exact experiments on linear recurrences, phi, sigma and sieves"};
  app.require_subcommand(1);
  Common common;

  // census
  std::string spec_path;
  std::int64_t x = 0;
  std::string kind = "phi";
  bool allow_degenerate = false;
  auto* census_cmd = app.add_subcommand("census", "classify every n <= x and summarise the failures");
  census_cmd->add_option("--spec", spec_path, "sequence spec file (or builtin:fibonacci|n2p1|lucas)")->required();
  census_cmd->add_option("--x", x, "upper index bound")->required();
  census_cmd->add_option("--kind", kind, "phi or sigma")->capture_default_str();
  census_cmd->add_flag("--allow-degenerate", allow_degenerate, "skip the nondegeneracy precondition");
  add_budget_flags(census_cmd, common);
  add_output_flags(census_cmd, common);

  // classify
  std::int64_t n = 0;
  auto* classify_cmd = app.add_subcommand("classify", "classify a single index n");
  classify_cmd->add_option("--spec", spec_path, "sequence spec file")->required();
  classify_cmd->add_option("--n", n, "index")->required();
  classify_cmd->add_option("--kind", kind, "phi or sigma")->capture_default_str();
  add_budget_flags(classify_cmd, common);

  // small-values
  std::string c_text = "1/10";
  int precision = 256;
  auto* small_cmd = app.add_subcommand("small-values", "indices with |U_n| <= |alpha_1|^(n(1-delta)), delta = x^-c");
  small_cmd->add_option("--spec", spec_path, "sequence spec file")->required();
  small_cmd->add_option("--x", x, "upper index bound")->required();
  small_cmd->add_option("--c", c_text, "exponent c in (0, 1/3), decimal or p/q")->capture_default_str();
  small_cmd->add_option("--precision", precision, "starting precision in bits")->capture_default_str();
  add_output_flags(small_cmd, common);

  // sieve-stats
  std::vector<std::uint64_t> xs;
  std::uint64_t y = 0;
  auto* sieve_cmd = app.add_subcommand("sieve-stats", "rough-number, high-Omega and tau(sigma) tail counts");
  sieve_cmd->add_option("--x", xs, "bounds, comma separated")->delimiter(',')->required();
  sieve_cmd->add_option("--y", y, "rough-number bound (default floor(x^0.1))");
  add_budget_flags(sieve_cmd, common);
  add_output_flags(sieve_cmd, common);

  // schoenberg
  std::uint64_t x_single = 0;
  std::vector<std::string> alphas;
  auto* schoenberg_cmd = app.add_subcommand("schoenberg", "empirical distribution of phi(n)/n");
  schoenberg_cmd->add_option("--x", x_single, "bound")->required();
  schoenberg_cmd->add_option("--alpha", alphas, "thresholds, comma separated (decimal or p/q)")
      ->delimiter(',')
      ->required();
  add_output_flags(schoenberg_cmd, common);

  // poly-experiment
  auto* poly_cmd = app.add_subcommand("poly-experiment", "phi inequality for U_n = n^2 + 1");
  poly_cmd->add_option("--x", x_single, "bound")->required();
  add_output_flags(poly_cmd, common);

  // forge
  std::vector<std::uint64_t> qs;
  std::uint64_t offset = 0;
  std::uint64_t search_limit = 100'000'000;
  bool cross_check = false;
  auto* forge_cmd = app.add_subcommand("forge", "build and certify a 2^n - a counterexample");
  forge_cmd->add_option("--qs", qs, "odd primes q_1 < ... < q_k, comma separated")->delimiter(',')->required();
  forge_cmd->add_option("--offset", offset, "use a = 2 + (offset + 1) prod q")->capture_default_str();
  forge_cmd->add_option("--search-limit", search_limit, "largest p tried")->capture_default_str();
  forge_cmd->add_flag("--cross-check", cross_check, "also classify U_p for U_n = 2^n - a");
  add_budget_flags(forge_cmd, common);
  add_output_flags(forge_cmd, common);

  // verify-certificate
  std::string cert_path;
  auto* verify_cmd = app.add_subcommand("verify-certificate", "re-derive every fact of a forge certificate");
  verify_cmd->add_option("--cert", cert_path, "certificate file")->required()->check(CLI::ExistingFile);

  // roots
  auto* roots_cmd = app.add_subcommand("roots", "certified root moduli and degeneracy of a spec");
  roots_cmd->add_option("--spec", spec_path, "sequence spec file")->required();
  roots_cmd->add_option("--precision", precision, "target relative precision in bits")->capture_default_str();

  // dashboard
  double y_exponent = 0.1;
  auto* dash_cmd = app.add_subcommand("dashboard", "tail counts against their reference curves");
  dash_cmd->add_option("--x", xs, "bounds, comma separated")->delimiter(',')->required();
  dash_cmd->add_option("--y-exponent", y_exponent, "rough-number bound y = x^e")->capture_default_str();
  add_budget_flags(dash_cmd, common);
  add_output_flags(dash_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitValidation;
  }

  try {
    if (census_cmd->parsed()) {
      const RecurrenceSpec spec = resolve_spec(spec_path);
      CensusOptions opt;
      opt.classify.budget = common.budget;
      opt.threads = common.threads;
      opt.allow_degenerate = allow_degenerate;
      const InequalityKind k = parse_kind(kind);
      const CensusReport report = census(spec, x, k, opt);
      const std::string tag = std::string("census_") + (k == InequalityKind::Phi ? "phi" : "sigma");
      const ReportHeader h = header_for(common, "census --x " + std::to_string(x) + " --kind " + kind);
      emit(common, tag + ".csv", census_csv(h, report));
      const std::string summary = census_summary(h, report, common.timestamp);
      emit(common, tag + "_summary.json", summary);
      std::cout << summary;
      return kExitOk;
    }
    if (classify_cmd->parsed()) {
      const RecurrenceSpec spec = resolve_spec(spec_path);
      ClassifyOptions opt;
      opt.budget = common.budget;
      const TrialOutcome o = classify(spec, n, parse_kind(kind), opt);
      nlohmann::ordered_json j;
      j["n"] = o.n;
      j["kind"] = to_string(o.kind);
      j["index_value"] = o.index_value;
      j["verdict"] = to_string(o.verdict);
      j["lhs_low"] = to_decimal(o.lhs_low);
      j["lhs_high"] = to_decimal(o.lhs_high);
      j["rhs"] = to_decimal(o.rhs);
      j["probable_used"] = o.probable_used;
      j["notes"] = o.notes;
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }
    if (small_cmd->parsed()) {
      const RecurrenceSpec spec = resolve_spec(spec_path);
      const SmallValueReport r = small_value_census(spec, x, parse_rational(c_text), precision);
      const std::string summary =
          small_value_summary(header_for(common, "small-values --x " + std::to_string(x) + " --c " + c_text), r);
      emit(common, "small_values.json", summary);
      std::cout << summary;
      return kExitOk;
    }
    if (sieve_cmd->parsed()) {
      std::vector<TailCountReport> rows;
      const SieveConfig cfg = sieve_config(common);
      for (auto xv : xs) {
        const std::uint64_t yv =
            y ? y : std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(std::pow(double(xv), 0.1) + 1e-9)));
        rows.push_back(count_rough(xv, yv, cfg));
        rows.push_back(count_high_omega(xv, cfg));
        rows.push_back(count_tau_sigma_large(xv, common.budget, cfg));
      }
      const std::string csv = tail_counts_csv(header_for(common, "sieve-stats"), rows);
      emit(common, "sieve_stats.csv", csv);
      std::cout << csv;
      return kExitOk;
    }
    if (schoenberg_cmd->parsed()) {
      std::vector<std::pair<std::string, std::string>> points;
      for (const auto& a : alphas) {
        const Rational alpha = parse_rational(a);
        const CdfValue v = schoenberg_cdf(x_single, alpha, sieve_config(common));
        points.emplace_back(to_string(alpha), to_string(v.fraction()));
      }
      const std::string csv =
          plot_csv(header_for(common, "schoenberg --x " + std::to_string(x_single)), "alpha", "cdf", points);
      emit(common, "schoenberg.csv", csv);
      std::cout << csv;
      return kExitOk;
    }
    if (poly_cmd->parsed()) {
      const PolyExperimentReport r = poly_experiment(x_single, common.threads);
      const std::string summary =
          poly_experiment_summary(header_for(common, "poly-experiment --x " + std::to_string(x_single)), r);
      emit(common, "poly_experiment.json", summary);
      std::cout << summary;
      return r.implication_violations.empty() && r.even_violations.empty() ? kExitOk : kExitReject;
    }
    if (forge_cmd->parsed()) {
      ForgeConfig cfg;
      cfg.qs = qs;
      cfg.offset = offset;
      cfg.search_limit = search_limit;
      const Certificate cert = run_forge(cfg);
      const std::string text = format_certificate(cert);
      emit(common, "certificate.json", text);
      std::cout << text;
      if (!cert.accepted) {
        std::cerr << "REJECT: " << cert.reason << "\n";
        return kExitReject;
      }
      if (cross_check) {
        ClassifyOptions opt;
        opt.budget = common.budget;
        const TrialOutcome o = classify_phi(power_of_two_minus_spec(cert.a), static_cast<std::int64_t>(cert.p), opt);
        std::cout << "cross-check classify_phi(2^n - a, n = " << cert.p << "): " << to_string(o.verdict) << "\n";
        if (o.verdict != Verdict::Fails) return kExitReject;
      }
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      std::ifstream in(cert_path);
      std::stringstream buf;
      buf << in.rdbuf();
      const VerifyResult r = verify_certificate(parse_certificate(buf.str()));
      std::cout << (r.ok ? "ACCEPT: " : "REJECT: ") << r.reason << "\n";
      return r.ok ? kExitOk : kExitReject;
    }
    if (roots_cmd->parsed()) {
      const RecurrenceSpec spec = resolve_spec(spec_path);
      const CharPoly cp = char_poly(spec);
      const RootData rd = roots(cp, precision);
      const DegeneracyReport d = degeneracy_check(cp);
      nlohmann::ordered_json j;
      j["char_poly"] = cp.poly.to_string();
      j["distinct_count"] = rd.distinct_count;
      j["precision_bits"] = rd.precision_bits;
      j["dominant_modulus_approx"] = {format_double(rd.dominant_modulus.lo.get_d()), format_double(rd.dominant_modulus.hi.get_d())};
      j["dominant_modulus"] = {to_string(rd.dominant_modulus.lo), to_string(rd.dominant_modulus.hi)};
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : rd.roots) {
        arr.push_back({{"modulus_low", format_double(r.modulus.lo.get_d())},
                       {"modulus_high", format_double(r.modulus.hi.get_d())},
                       {"is_real", r.is_real},
                       {"multiplicity", r.multiplicity}});
      }
      j["roots"] = arr;
      j["nondegenerate"] = d.nondegenerate;
      j["polynomial_type"] = d.polynomial_type;
      auto w = nlohmann::ordered_json::array();
      for (const auto& wi : d.witnesses) w.push_back({{"i", wi.i}, {"j", wi.j}, {"order", wi.order}});
      j["witnesses"] = w;
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }
    if (dash_cmd->parsed()) {
      const std::vector<DashboardRow> rows = lemma_dashboard(xs, y_exponent, common.budget, sieve_config(common));
      const ReportHeader h = header_for(common, "dashboard");
      const std::string csv = dashboard_csv(h, rows);
      emit(common, "dashboard.csv", csv);
      std::vector<std::pair<std::string, std::string>> rough, omega, tau;
      for (const auto& r : rows) {
        rough.emplace_back(std::to_string(r.x), std::to_string(r.rough.count));
        omega.emplace_back(std::to_string(r.x), std::to_string(r.high_omega.count));
        tau.emplace_back(std::to_string(r.x), std::to_string(r.tau_sigma.count));
      }
      emit(common, "plot_rough.csv", plot_csv(h, "x", "rough_count", rough));
      emit(common, "plot_high_omega.csv", plot_csv(h, "x", "high_omega_count", omega));
      emit(common, "plot_tau_sigma.csv", plot_csv(h, "x", "tau_sigma_count", tau));
      std::cout << csv;
      return kExitOk;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitValidation;
}
