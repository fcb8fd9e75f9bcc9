#include <string>
#include <vector>

#include "fockbound/errors.hpp"
#include "fockbound/ladder.hpp"

namespace fockbound::serial {

FockVector apply_create(const OneParticleVector& f, const FockVector& phi) {
  const FockBasis& basis = phi.basis();
  if (f.dim() != basis.modes()) throw DimensionMismatch("serial::apply_create: dimension");
  CVector out = CVector::Zero(basis.dim());
  std::vector<int> occ;
  for (Index s = 0; s < basis.dim(); ++s) {
    const Complex c = phi[s];
    if (c == Complex(0.0)) continue;
    if (basis.sector_of(s) == basis.n_max()) {
      throw TruncationOverflow("serial::apply_create: support on sector n_max");
    }
    occ = basis.occupation_of(s);
    for (int j = 0; j < basis.modes(); ++j) {
      ++occ[j];
      out[basis.index_of(occ)] += f[j] * basis.ladder_factor(occ[j]) * c;
      --occ[j];
    }
  }
  return FockVector(phi.basis_ptr(), std::move(out));
}

FockVector apply_annihilate(const OneParticleVector& f, const FockVector& phi) {
  const FockBasis& basis = phi.basis();
  if (f.dim() != basis.modes()) throw DimensionMismatch("serial::apply_annihilate: dimension");
  CVector out = CVector::Zero(basis.dim());
  std::vector<int> occ;
  for (Index s = 0; s < basis.dim(); ++s) {
    const Complex c = phi[s];
    if (c == Complex(0.0)) continue;
    occ = basis.occupation_of(s);
    for (int j = 0; j < basis.modes(); ++j) {
      if (occ[j] == 0) continue;
      const double w = basis.ladder_factor(occ[j]);
      --occ[j];
      out[basis.index_of(occ)] += f[j] * w * c;
      ++occ[j];
    }
  }
  return FockVector(phi.basis_ptr(), std::move(out));
}

}  // namespace fockbound::serial
