#pragma once

#include <stdexcept>
#include <string>

namespace fockbound {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a creation-type operation would need a sector above n_max.
struct TruncationOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CostGuardExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed or out-of-range experiment configuration; the CLI maps it to exit 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fockbound
