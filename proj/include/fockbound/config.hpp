#pragma once

// Experiment configuration for the fockbound command line. The file format is
// described in docs/config.md.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fockbound/oneparticle.hpp"
#include "fockbound/quadratic.hpp"
#include "fockbound/verifier.hpp"

namespace fockbound {

inline constexpr int kConfigSchemaVersion = 1;

/// Named generator for a one-particle coefficient operator.
struct OperatorProfile {
  enum class Kind { Identity, Diagonal, Random, Swap, RankOne };

  Kind kind = Kind::Identity;
  /// Diagonal entry j (1-based) is scale * j^power.
  double power = 0.0;
  double scale = 1.0;
  /// Random: stream seed, mixed with the master seed.
  std::uint64_t seed = 0;
  /// RankOne: e_row e_col^T, 1-based.
  int row = 1;
  int col = 1;

  OneParticleOperator build(int d, std::uint64_t master_seed) const;
  /// Entry formula for diagonal profiles; empty for the others.
  std::optional<std::function<double(int)>> diagonal_entry() const;
};

std::string_view to_string(OperatorProfile::Kind kind);

enum class InitialState { Vacuum, Sector2Random };
std::string_view to_string(InitialState state);

struct ConvergeExperiment {
  std::string name;
  QuadraticKind family = QuadraticKind::DGamma;
  std::string profile;
  int d = 40;
  int n_max = 2;
  InitialState state = InitialState::Sector2Random;
  /// Defaults to 0..d.
  std::vector<int> m_grid;
};

struct WitnessExperiment {
  std::string name;
  WitnessFamily family = WitnessFamily::A;
  std::string profile;
  std::vector<int> grid;
};

struct ExperimentConfig {
  int schema_version = kConfigSchemaVersion;
  int d = 6;
  int n_max = 4;
  std::uint64_t seed = 1;
  std::string output_dir = "fockbound_out";
  ToleranceConfig tolerances;
  std::map<std::string, OperatorProfile> profiles;
  std::vector<ConvergeExperiment> converge;
  std::vector<WitnessExperiment> witnesses;

  /// Throws ConfigError.
  void validate() const;
  SuiteOptions suite_options() const;
};

/// Parses and validates; throws ConfigError on any problem.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_config(const std::string& text);

}  // namespace fockbound
