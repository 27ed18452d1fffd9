#include "lrslab/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lrslab/errors.hpp"

namespace lrslab {

namespace {

std::string header_lines(const ReportHeader& h) {
  std::string out = "# command: " + h.command + "\n# seed: " + std::to_string(h.seed) + "\n";
  if (h.timestamp) out += "# timestamp: " + *h.timestamp + "\n";
  return out;
}

nlohmann::ordered_json header_json(const ReportHeader& h) {
  nlohmann::ordered_json j;
  j["command"] = h.command;
  j["seed"] = h.seed;
  if (h.timestamp) j["timestamp"] = *h.timestamp;
  return j;
}

template <typename T>
nlohmann::ordered_json int_list(const std::vector<T>& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : v) arr.push_back(e);
  return arr;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string tail_counts_csv(const ReportHeader& header, const std::vector<TailCountReport>& rows) {
  std::ostringstream os;
  os << header_lines(header) << "experiment,x,threshold,count,comparison_value,undecided_count\n";
  for (const auto& r : rows) {
    os << r.experiment << ',' << r.x << ',' << format_double(r.threshold) << ',' << r.count << ','
       << format_double(r.comparison) << ',' << r.undecided << '\n';
  }
  return os.str();
}

std::string census_csv(const ReportHeader& header, const CensusReport& report) {
  std::ostringstream os;
  os << header_lines(header) << "n,kind,verdict,lhs_low,lhs_high,rhs,probable_used\n";
  for (const auto& o : report.outcomes) {
    os << o.n << ',' << to_string(o.kind) << ',' << to_string(o.verdict) << ',' << to_decimal(o.lhs_low) << ','
       << to_decimal(o.lhs_high) << ',' << to_decimal(o.rhs) << ',' << (o.probable_used ? 1 : 0) << '\n';
  }
  for (const auto& [n, why] : report.errored) {
    os << n << ',' << to_string(report.kind) << ",ERROR,,,," << 0 << '\n';
  }
  return os.str();
}

std::string census_summary(const ReportHeader& header, const CensusReport& report, bool include_runtime) {
  nlohmann::ordered_json j;
  j["header"] = header_json(header);
  j["x"] = report.x;
  j["kind"] = to_string(report.kind);
  j["holds"] = report.holds;
  j["fails"] = report.fails;
  j["undecided"] = report.undecided;
  j["skipped_zero"] = report.skipped_zero;
  j["errored"] = report.errored.size();
  j["probable_used"] = report.probable_used;
  j["ratio_fails_over_x_div_log_x"] = format_double(report.ratio);
  j["exceptional_indices"] = int_list(report.exceptional_indices);
  j["prime_failures"] = int_list(report.prime_failures);
  j["undecided_indices"] = int_list(report.undecided_indices);
  auto errs = nlohmann::ordered_json::array();
  for (const auto& [n, why] : report.errored) errs.push_back({{"n", n}, {"error", why}});
  j["errors"] = errs;
  if (include_runtime) j["elapsed_seconds"] = report.elapsed_seconds;
  return j.dump(2) + "\n";
}

std::string small_value_summary(const ReportHeader& header, const SmallValueReport& report) {
  nlohmann::ordered_json j;
  j["header"] = header_json(header);
  j["x"] = report.x;
  j["c"] = to_string(report.c);
  j["delta"] = format_double(report.delta);
  j["precision_bits"] = report.precision_bits;
  j["count"] = report.indices.size();
  j["count_over_sqrt_x"] = format_double(report.size_constant);
  j["indices"] = int_list(report.indices);
  j["undecided"] = int_list(report.undecided);
  j["zero_terms"] = int_list(report.zero_terms);
  return j.dump(2) + "\n";
}

std::string poly_experiment_summary(const ReportHeader& header, const PolyExperimentReport& r) {
  nlohmann::ordered_json j;
  j["header"] = header_json(header);
  j["x"] = r.x;
  j["failures"] = r.failures;
  j["failures_odd"] = r.failures_odd;
  j["failures_even"] = r.failures_even;
  j["failure_density"] = format_double(r.failure_density);
  j["tail_count"] = r.tail_count;
  j["tail_density"] = format_double(r.tail_density);
  j["implication_checked"] = r.implication_checked;
  j["implication_violations"] = int_list(r.implication_violations);
  j["even_violations"] = int_list(r.even_violations);
  return j.dump(2) + "\n";
}

std::string dashboard_csv(const ReportHeader& header, const std::vector<DashboardRow>& rows) {
  std::vector<TailCountReport> flat;
  for (const auto& row : rows) {
    flat.push_back(row.rough);
    flat.push_back(row.high_omega);
    flat.push_back(row.tau_sigma);
  }
  return tail_counts_csv(header, flat);
}

std::string plot_csv(const ReportHeader& header, const std::string& x_name, const std::string& y_name,
                     const std::vector<std::pair<std::string, std::string>>& points) {
  std::ostringstream os;
  os << header_lines(header) << x_name << ',' << y_name << '\n';
  for (const auto& [a, b] : points) os << a << ',' << b << '\n';
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw ResourceError("failed writing " + path.string());
}

}  // namespace lrslab
