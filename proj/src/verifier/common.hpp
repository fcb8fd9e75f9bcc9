#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fockbound/fock_vector.hpp"
#include "fockbound/oneparticle.hpp"
#include "fockbound/rng.hpp"

namespace fockbound::detail {

/// num / den, with 0/0 = 0 and x/0 = inf.
inline double relative(double num, double den) {
  if (den > 0.0) return num / den;
  return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

inline std::vector<OneParticleVector> random_vectors(int count, int d, Rng& rng) {
  std::vector<OneParticleVector> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(OneParticleVector::random(d, rng));
  return out;
}

/// Keeps the running maximum of a residual together with a label for it.
struct MaxTracker {
  double value = 0.0;
  std::string witness;

  void update(double v, const std::string& label) {
    if (std::isnan(value)) return;
    if (std::isnan(v) || witness.empty() || v > value) {
      value = v;
      witness = label;
    }
  }
};

}  // namespace fockbound::detail
