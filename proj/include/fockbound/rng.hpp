#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace fockbound {

/// Seeded stream used by every stochastic operation.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Uniform and Gaussian variates are derived here (53-bit uniform,
/// Box-Muller) instead of through <random> distributions so that streams are
/// bit-reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  double normal();
  /// Circular complex Gaussian with E|z|^2 = 1.
  std::complex<double> complex_normal();

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Independent stream seed for a named sub-task of a run.
std::uint64_t derive_seed(std::uint64_t master, std::string_view name);

}  // namespace fockbound
