#pragma once

#include <optional>
#include <span>

#include "fockbound/fock_basis.hpp"
#include "fockbound/oneparticle.hpp"
#include "fockbound/rng.hpp"

namespace fockbound {

/// Coefficient vector over a FockBasis, addressable per particle-number sector.
class FockVector {
 public:
  /// Zero vector.
  explicit FockVector(BasisPtr basis);
  FockVector(BasisPtr basis, CVector coefficients);

  static FockVector vacuum(BasisPtr basis);
  static FockVector basis_state(BasisPtr basis, Index idx);
  static FockVector from_occupation(BasisPtr basis, std::span<const int> occupation);

  const FockBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const CVector& coefficients() const { return coefficients_; }
  Complex operator[](Index idx) const { return coefficients_[idx]; }
  Complex at(std::span<const int> occupation) const;

  auto block(int n) const {
    return coefficients_.segment(basis_->sector_offset(n), basis_->sector_size(n));
  }
  double sector_norm(int n) const { return block(n).norm(); }
  /// sqrt of the sum of squared sector norms.
  double norm() const;
  double squared_norm() const;

  /// Largest sector with a nonzero entry; empty for the zero vector.
  std::optional<int> top_sector() const;
  std::optional<int> bottom_sector() const;

  FockVector restricted_to_sector(int n) const;

  friend FockVector operator+(const FockVector& a, const FockVector& b);
  friend FockVector operator-(const FockVector& a, const FockVector& b);
  friend FockVector operator*(Complex s, const FockVector& v);

 private:
  BasisPtr basis_;
  CVector coefficients_;
};

/// Antilinear in the first argument.
Complex inner_product(const FockVector& phi, const FockVector& psi);

bool same_space(const FockBasis& a, const FockBasis& b);

/// Unit vector with i.i.d. complex Gaussian coefficients on sectors
/// [lo, hi]; each sector in range is kept with probability 1/2 (at least one).
FockVector random_state(const BasisPtr& basis, Rng& rng, int lo, int hi);

/// Unit vector with i.i.d. complex Gaussian coefficients on exactly sector n.
FockVector random_sector_state(const BasisPtr& basis, Rng& rng, int n);

}  // namespace fockbound
