#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrslab/density.hpp"
#include "lrslab/inequality.hpp"
#include "lrslab/sieve.hpp"

namespace lrslab {

// First lines of every report file. The timestamp is left out unless set,
// so two identical runs write identical bytes.
struct ReportHeader {
  std::string command;
  std::uint64_t seed = 0;
  std::optional<std::string> timestamp;
};

// Fixed-format decimal rendering used in every report.
std::string format_double(double v);

std::string tail_counts_csv(const ReportHeader& header, const std::vector<TailCountReport>& rows);
std::string census_csv(const ReportHeader& header, const CensusReport& report);
// Summary as JSON; runtime is included only when asked for.
std::string census_summary(const ReportHeader& header, const CensusReport& report, bool include_runtime);
std::string small_value_summary(const ReportHeader& header, const SmallValueReport& report);
std::string poly_experiment_summary(const ReportHeader& header, const PolyExperimentReport& report);
std::string dashboard_csv(const ReportHeader& header, const std::vector<DashboardRow>& rows);
// Two columns for external plotting.
std::string plot_csv(const ReportHeader& header, const std::string& x_name, const std::string& y_name,
                     const std::vector<std::pair<std::string, std::string>>& points);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace lrslab
