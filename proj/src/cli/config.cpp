#include "fockbound/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "fockbound/errors.hpp"
#include "fockbound/rng.hpp"

namespace fockbound {
namespace {

constexpr int kMaxWitnessDim = 2048;

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

void reject_unknown(const YAML::Node& node, const std::string& where,
                    std::initializer_list<std::string_view> keys) {
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      fail(where + ": unknown key '" + key + "'");
    }
  }
}

template <class T>
void read(const YAML::Node& node, const char* key, T& dst, const std::string& where) {
  const YAML::Node value = node[key];
  if (!value) return;
  try {
    dst = value.as<T>();
  } catch (const YAML::Exception&) {
    fail(where + "." + key + ": wrong type");
  }
}

template <class T>
T require(const YAML::Node& node, const char* key, const std::string& where) {
  if (!node[key]) fail(where + ": missing '" + key + "'");
  T value{};
  read(node, key, value, where);
  return value;
}

bool valid_name(const std::string& name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

OperatorProfile::Kind parse_kind(const std::string& s, const std::string& where) {
  using K = OperatorProfile::Kind;
  for (K k : {K::Identity, K::Diagonal, K::Random, K::Swap, K::RankOne}) {
    if (to_string(k) == s) return k;
  }
  fail(where + ": unknown profile kind '" + s + "'");
}

OperatorProfile parse_profile(const YAML::Node& node, const std::string& where) {
  if (!node.IsMap()) fail(where + ": expected a mapping");
  reject_unknown(node, where, {"kind", "power", "scale", "seed", "row", "col"});
  OperatorProfile p;
  p.kind = parse_kind(require<std::string>(node, "kind", where), where);
  read(node, "power", p.power, where);
  read(node, "scale", p.scale, where);
  read(node, "seed", p.seed, where);
  read(node, "row", p.row, where);
  read(node, "col", p.col, where);
  return p;
}

std::vector<int> read_grid(const YAML::Node& node, const char* key, const std::string& where) {
  std::vector<int> grid;
  read(node, key, grid, where);
  return grid;
}

void check_grid(const std::vector<int>& grid, int lo, int hi, const std::string& where) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < lo || grid[i] > hi) {
      fail(where + ": grid value " + std::to_string(grid[i]) + " outside [" + std::to_string(lo) +
           ", " + std::to_string(hi) + "]");
    }
    if (i > 0 && grid[i] <= grid[i - 1]) fail(where + ": grid must be strictly increasing");
  }
}

}  // namespace

std::string_view to_string(OperatorProfile::Kind kind) {
  switch (kind) {
    case OperatorProfile::Kind::Identity: return "identity";
    case OperatorProfile::Kind::Diagonal: return "diagonal";
    case OperatorProfile::Kind::Random: return "random";
    case OperatorProfile::Kind::Swap: return "swap";
    case OperatorProfile::Kind::RankOne: return "rank_one";
  }
  return "?";
}

std::string_view to_string(InitialState state) {
  return state == InitialState::Vacuum ? "vacuum" : "sector2_random";
}

std::optional<std::function<double(int)>> OperatorProfile::diagonal_entry() const {
  switch (kind) {
    case Kind::Identity: return [](int) { return 1.0; };
    case Kind::Diagonal: return [p = power, s = scale](int j) { return s * std::pow(j, p); };
    default: return std::nullopt;
  }
}

OneParticleOperator OperatorProfile::build(int d, std::uint64_t master_seed) const {
  switch (kind) {
    case Kind::Identity:
      return OneParticleOperator::identity(d);
    case Kind::Diagonal: {
      const auto entry = *diagonal_entry();
      std::vector<Complex> diag(d);
      for (int j = 0; j < d; ++j) diag[j] = entry(j + 1);
      return OneParticleOperator::diagonal(diag);
    }
    case Kind::Random: {
      Rng rng(derive_seed(master_seed, "profile.random." + std::to_string(seed)));
      return OneParticleOperator::random(d, rng);
    }
    case Kind::Swap:
      if (d < 2) fail("swap profile needs d >= 2");
      return OneParticleOperator::swap(d);
    case Kind::RankOne:
      if (row < 1 || row > d || col < 1 || col > d) fail("rank_one profile: mode out of range");
      return OneParticleOperator::rank_one(OneParticleVector::unit(d, row - 1),
                                           OneParticleVector::unit(d, col - 1));
  }
  fail("unknown profile kind");
}

void ExperimentConfig::validate() const {
  if (schema_version != kConfigSchemaVersion) {
    fail("schema_version must be " + std::to_string(kConfigSchemaVersion));
  }
  if (d < 1) fail("d must be >= 1");
  if (n_max < 1) fail("n_max must be >= 1");
  try {
    tolerances.validate();
  } catch (const std::invalid_argument& e) {
    fail(std::string("tolerances: ") + e.what());
  }
  for (const auto& [name, p] : profiles) {
    if (!valid_name(name)) fail("profile name '" + name + "' is not [A-Za-z0-9_-]+");
    if (!std::isfinite(p.power) || !std::isfinite(p.scale)) {
      fail("profile " + name + ": power and scale must be finite");
    }
  }

  const auto profile_of = [this](const std::string& name, const std::string& where) {
    const auto it = profiles.find(name);
    if (it == profiles.end()) fail(where + ": unknown profile '" + name + "'");
    return it->second;
  };

  std::set<std::string> seen;
  for (const auto& e : converge) {
    const std::string where = "converge." + e.name;
    if (!valid_name(e.name)) fail("converge: bad experiment name '" + e.name + "'");
    if (!seen.insert(e.name).second) fail(where + ": duplicate name");
    if (e.d < 1) fail(where + ": d must be >= 1");
    if (e.family != QuadraticKind::Number) {
      const OperatorProfile p = profile_of(e.profile, where);
      if (p.kind == OperatorProfile::Kind::Swap && e.d < 2) fail(where + ": swap needs d >= 2");
      if (p.kind == OperatorProfile::Kind::RankOne && (std::max(p.row, p.col) > e.d)) {
        fail(where + ": rank_one mode exceeds d");
      }
    }
    const int sector = e.state == InitialState::Vacuum ? 0 : 2;
    const int headroom = e.family == QuadraticKind::DeltaPlus ? 2 : 0;
    if (e.family == QuadraticKind::DeltaPlus && e.n_max < 2) {
      fail(where + ": deltaplus needs n_max >= 2");
    }
    if (sector + headroom > e.n_max) {
      fail(where + ": state sector " + std::to_string(sector) + " leaves no room below n_max");
    }
    check_grid(e.m_grid, 0, e.d, where);
  }

  seen.clear();
  for (const auto& w : witnesses) {
    const std::string where = "witnesses." + w.name;
    if (!valid_name(w.name)) fail("witnesses: bad experiment name '" + w.name + "'");
    if (!seen.insert(w.name).second) fail(where + ": duplicate name");
    if (!profile_of(w.profile, where).diagonal_entry()) {
      fail(where + ": witness profiles must be identity or diagonal");
    }
    if (w.grid.empty()) fail(where + ": grid is empty");
    check_grid(w.grid, 1, kMaxWitnessDim, where);
  }
}

SuiteOptions ExperimentConfig::suite_options() const {
  SuiteOptions o;
  o.d = d;
  o.n_max = n_max;
  o.seed = seed;
  o.tol = tolerances;
  return o;
}

ExperimentConfig parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    fail(std::string("YAML parse error: ") + e.what());
  }
  if (!root.IsMap()) fail("config root must be a mapping");
  reject_unknown(root, "config", {"schema_version", "d", "n_max", "seed", "output_dir",
                                  "tolerances", "profiles", "converge", "witnesses"});

  ExperimentConfig c;
  c.schema_version = require<int>(root, "schema_version", "config");
  read(root, "d", c.d, "config");
  read(root, "n_max", c.n_max, "config");
  read(root, "seed", c.seed, "config");
  read(root, "output_dir", c.output_dir, "config");

  if (const YAML::Node tol = root["tolerances"]) {
    if (!tol.IsMap()) fail("tolerances: expected a mapping");
    reject_unknown(tol, "tolerances", {"identity_rel_tol", "psd_eig_tol", "bound_slack"});
    read(tol, "identity_rel_tol", c.tolerances.identity_rel_tol, "tolerances");
    read(tol, "psd_eig_tol", c.tolerances.psd_eig_tol, "tolerances");
    read(tol, "bound_slack", c.tolerances.bound_slack, "tolerances");
  }

  if (const YAML::Node profiles = root["profiles"]) {
    if (!profiles.IsMap()) fail("profiles: expected a mapping");
    for (const auto& kv : profiles) {
      const auto name = kv.first.as<std::string>();
      c.profiles[name] = parse_profile(kv.second, "profiles." + name);
    }
  }

  if (const YAML::Node list = root["converge"]) {
    if (!list.IsSequence()) fail("converge: expected a list");
    for (const auto& node : list) {
      if (!node.IsMap()) fail("converge: entries must be mappings");
      reject_unknown(node, "converge", {"name", "family", "profile", "d", "n_max", "state", "m_grid"});
      ConvergeExperiment e;
      e.name = require<std::string>(node, "name", "converge");
      const std::string where = "converge." + e.name;
      const auto family = parse_quadratic_kind(require<std::string>(node, "family", where));
      if (!family) fail(where + ": unknown family");
      e.family = *family;
      e.n_max = c.n_max;
      read(node, "profile", e.profile, where);
      read(node, "d", e.d, where);
      read(node, "n_max", e.n_max, where);
      std::string state = std::string(to_string(e.state));
      read(node, "state", state, where);
      if (state == "vacuum") {
        e.state = InitialState::Vacuum;
      } else if (state == "sector2_random") {
        e.state = InitialState::Sector2Random;
      } else {
        fail(where + ": unknown state '" + state + "'");
      }
      e.m_grid = read_grid(node, "m_grid", where);
      if (e.m_grid.empty()) {
        for (int m = 0; m <= std::max(e.d, 0); ++m) e.m_grid.push_back(m);
      }
      c.converge.push_back(std::move(e));
    }
  }

  if (const YAML::Node list = root["witnesses"]) {
    if (!list.IsSequence()) fail("witnesses: expected a list");
    for (const auto& node : list) {
      if (!node.IsMap()) fail("witnesses: entries must be mappings");
      reject_unknown(node, "witnesses", {"name", "family", "profile", "grid"});
      WitnessExperiment w;
      w.name = require<std::string>(node, "name", "witnesses");
      const std::string where = "witnesses." + w.name;
      const auto family = parse_witness_family(require<std::string>(node, "family", where));
      if (!family) fail(where + ": family must be B, A or C");
      w.family = *family;
      w.profile = require<std::string>(node, "profile", where);
      w.grid = read_grid(node, "grid", where);
      c.witnesses.push_back(std::move(w));
    }
  }

  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace fockbound
