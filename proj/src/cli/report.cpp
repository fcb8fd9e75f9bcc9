#include "fockbound/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <system_error>

#include "fockbound/errors.hpp"

namespace fockbound {
namespace {

using nlohmann::json;

// JSON has no NaN or infinity; they travel as strings.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double number_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  throw ConfigError("report: bad number '" + s + "'");
}

json numbers(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

std::vector<double> numbers_from(const json& j) {
  std::vector<double> out;
  for (const auto& x : j) out.push_back(number_from(x));
  return out;
}

json profile_to_json(const OperatorProfile& p) {
  json j{{"kind", to_string(p.kind)}};
  switch (p.kind) {
    case OperatorProfile::Kind::Diagonal: j["power"] = p.power; j["scale"] = p.scale; break;
    case OperatorProfile::Kind::Random: j["seed"] = p.seed; break;
    case OperatorProfile::Kind::RankOne: j["row"] = p.row; j["col"] = p.col; break;
    default: break;
  }
  return j;
}

}  // namespace

json config_to_json(const ExperimentConfig& c) {
  json profiles = json::object();
  for (const auto& [name, p] : c.profiles) profiles[name] = profile_to_json(p);
  json converge = json::array();
  for (const auto& e : c.converge) {
    converge.push_back({{"name", e.name},
                        {"family", to_string(e.family)},
                        {"profile", e.profile},
                        {"d", e.d},
                        {"n_max", e.n_max},
                        {"state", to_string(e.state)},
                        {"m_grid", e.m_grid}});
  }
  json witnesses = json::array();
  for (const auto& w : c.witnesses) {
    witnesses.push_back({{"name", w.name},
                         {"family", to_string(w.family)},
                         {"profile", w.profile},
                         {"grid", w.grid}});
  }
  return {{"schema_version", c.schema_version},
          {"d", c.d},
          {"n_max", c.n_max},
          {"seed", c.seed},
          {"tolerances",
           {{"identity_rel_tol", c.tolerances.identity_rel_tol},
            {"psd_eig_tol", c.tolerances.psd_eig_tol},
            {"bound_slack", c.tolerances.bound_slack}}},
          {"profiles", profiles},
          {"converge", converge},
          {"witnesses", witnesses}};
}

json to_json(const RunReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"residual", number(c.residual)},
                      {"tolerance", number(c.tolerance)},
                      {"witness", c.witness}});
  }
  json curves = json::array();
  for (const auto& c : r.curves) {
    curves.push_back({{"name", c.name},
                      {"family", c.family},
                      {"profile", c.profile},
                      {"axis", c.axis},
                      {"value_label", c.value_label},
                      {"m", c.m_values},
                      {"values", numbers(c.values)},
                      {"reference", numbers(c.reference)},
                      {"passed", c.passed}});
  }
  return {{"schema_version", r.schema_version},
          {"command", r.command},
          {"config", r.config},
          {"passed", r.passed},
          {"checks", checks},
          {"curves", curves}};
}

RunReport report_from_json(const json& j) {
  try {
    RunReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion) {
      throw ConfigError("report: unsupported schema_version");
    }
    r.command = j.at("command").get<std::string>();
    r.config = j.at("config");
    r.passed = j.at("passed").get<bool>();
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                          number_from(c.at("residual")), number_from(c.at("tolerance")),
                          c.at("witness").get<std::string>()});
    }
    for (const auto& c : j.at("curves")) {
      CurveRecord curve;
      curve.name = c.at("name").get<std::string>();
      curve.family = c.at("family").get<std::string>();
      curve.profile = c.at("profile").get<std::string>();
      curve.axis = c.at("axis").get<std::string>();
      curve.value_label = c.at("value_label").get<std::string>();
      curve.m_values = c.at("m").get<std::vector<int>>();
      curve.values = numbers_from(c.at("values"));
      curve.reference = numbers_from(c.at("reference"));
      curve.passed = c.at("passed").get<bool>();
      r.curves.push_back(std::move(curve));
    }
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("report: ") + e.what());
  }
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string curve_csv(const CurveRecord& curve) {
  std::string out = curve.axis + "," + curve.value_label + "\n";
  for (std::size_t i = 0; i < curve.m_values.size(); ++i) {
    out += std::to_string(curve.m_values[i]);
    out += ',';
    out += format_double(curve.values[i]);
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace fockbound
