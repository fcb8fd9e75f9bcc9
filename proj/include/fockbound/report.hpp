#pragma once

// Run reports (JSON) and curve tables (CSV). Layout in docs/report.md.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockbound/config.hpp"
#include "fockbound/verifier.hpp"

namespace fockbound {

inline constexpr int kReportSchemaVersion = 1;

struct CurveRecord {
  std::string name;
  std::string family;
  std::string profile;
  /// Header of the first CSV column.
  std::string axis = "M";
  std::string value_label = "error";
  std::vector<int> m_values;
  std::vector<double> values;
  /// Closed-form values where one exists, else empty.
  std::vector<double> reference;
  bool passed = false;
};

struct RunReport {
  int schema_version = kReportSchemaVersion;
  std::string command;
  nlohmann::json config;
  std::vector<CheckResult> checks;
  std::vector<CurveRecord> curves;
  bool passed = false;
};

nlohmann::json config_to_json(const ExperimentConfig& config);

nlohmann::json to_json(const RunReport& report);
/// Inverse of to_json; throws ConfigError on schema mismatch.
RunReport report_from_json(const nlohmann::json& j);

/// Shortest form with 17 significant digits, '.' separator.
std::string format_double(double value);
/// Header row "<axis>,<value_label>" then one row per grid point.
std::string curve_csv(const CurveRecord& curve);

/// Writes to a sibling temporary then renames over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace fockbound
