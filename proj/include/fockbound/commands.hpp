#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace fockbound {

/// Exit codes of the command line.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Overrides the configured output directory; --out wins over it.
inline constexpr const char* kOutDirEnv = "FOCKBOUND_OUT_DIR";

struct CommandOptions {
  std::filesystem::path config;
  std::optional<std::filesystem::path> out_dir;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
};

int cmd_verify(const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_converge(const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_diverge(const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace fockbound
