#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace fockbound {

using Index = std::ptrdiff_t;

/// Occupation-number basis of the truncated symmetric Fock space over C^d.
///
/// States with n_1 + ... + n_d <= n_max are ranked in graded colexicographic
/// order: sectors ascending, and inside a sector occupations compare by the
/// last mode first, so for d = 2, n_max = 2 the order is
/// (0,0) (1,0) (0,1) (2,0) (1,1) (0,2). Rank 0 is the vacuum.
///
/// Neighbour tables (one mode raised or lowered) are precomputed; the
/// per-mode ladder factor table defaults to sqrt(k).
class FockBasis {
 public:
  /// k -> matrix element of a_j on |.. k ..>. Overridable for mutation testing.
  using LadderFactor = std::function<double(int)>;

  static constexpr Index kMaxDim = 10'000'000;

  FockBasis(int modes, int n_max, const LadderFactor& factor = {});

  int modes() const { return modes_; }
  int n_max() const { return n_max_; }
  Index dim() const { return static_cast<Index>(sector_offsets_.back()); }

  Index sector_offset(int n) const { return sector_offsets_[n]; }
  Index sector_size(int n) const { return sector_offsets_[n + 1] - sector_offsets_[n]; }
  int sector_of(Index idx) const;

  std::span<const std::uint16_t> occupation(Index idx) const {
    return {occupations_.data() + idx * modes_, static_cast<std::size_t>(modes_)};
  }
  std::vector<int> occupation_of(Index idx) const;

  /// Direct combinatorial ranking; independent of the neighbour tables.
  Index index_of(std::span<const int> occupation) const;

  /// Index of the state with mode j raised by one, or -1 above n_max.
  Index raised(Index idx, int j) const { return raise_[idx * modes_ + j]; }
  /// Index of the state with mode j lowered by one, or -1 if n_j = 0.
  Index lowered(Index idx, int j) const { return lower_[idx * modes_ + j]; }

  double ladder_factor(int k) const { return factors_[k]; }

  /// Number of occupations of `particles` bosons in `modes` modes.
  static Index count_compositions(int modes, int particles);

 private:
  int modes_;
  int n_max_;
  std::vector<Index> sector_offsets_;
  std::vector<std::uint16_t> occupations_;
  std::vector<std::int32_t> raise_;
  std::vector<std::int32_t> lower_;
  std::vector<Index> compositions_;  // (k, m) -> count_compositions(k, m)
  std::vector<double> factors_;

  Index compositions(int k, int m) const { return compositions_[k * (n_max_ + 1) + m]; }
};

using BasisPtr = std::shared_ptr<const FockBasis>;

BasisPtr build_basis(int modes, int n_max, const FockBasis::LadderFactor& factor = {});

}  // namespace fockbound
