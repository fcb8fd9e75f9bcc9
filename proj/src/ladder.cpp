#include "fockbound/ladder.hpp"

#include <cmath>
#include <string>

#include "fockbound/errors.hpp"

namespace fockbound {
namespace {

void require_modes(const OneParticleVector& f, const FockVector& phi) {
  if (f.dim() != phi.basis().modes()) {
    throw DimensionMismatch("ladder: one-particle dimension " + std::to_string(f.dim()) +
                            " differs from mode count " + std::to_string(phi.basis().modes()));
  }
}

}  // namespace

FockVector apply_create(const OneParticleVector& f, const FockVector& phi) {
  require_modes(f, phi);
  const FockBasis& basis = phi.basis();
  const auto top = phi.top_sector();
  if (!top) return FockVector(phi.basis_ptr());
  if (*top >= basis.n_max()) {
    throw TruncationOverflow("apply_create: state has support on sector n_max = " +
                             std::to_string(basis.n_max()));
  }
  const int lo = *phi.bottom_sector();
  const int d = basis.modes();
  const CVector& in = phi.coefficients();
  const CVector& fv = f.entries();
  CVector out = CVector::Zero(basis.dim());

  const Index begin = basis.sector_offset(lo + 1);
  const Index end = basis.sector_offset(*top + 2);
#pragma omp parallel for if (end - begin > kParallelThreshold) schedule(static)
  for (Index m = begin; m < end; ++m) {
    const auto occ = basis.occupation(m);
    Complex sum = 0.0;
    for (int j = 0; j < d; ++j) {
      if (occ[j] == 0) continue;
      sum += fv[j] * basis.ladder_factor(occ[j]) * in[basis.lowered(m, j)];
    }
    out[m] = sum;
  }
  return FockVector(phi.basis_ptr(), std::move(out));
}

FockVector apply_annihilate(const OneParticleVector& f, const FockVector& phi) {
  require_modes(f, phi);
  const FockBasis& basis = phi.basis();
  const auto top = phi.top_sector();
  if (!top || *top == 0) return FockVector(phi.basis_ptr());
  const int lo = std::max(*phi.bottom_sector() - 1, 0);
  const int d = basis.modes();
  const CVector& in = phi.coefficients();
  const CVector& fv = f.entries();
  CVector out = CVector::Zero(basis.dim());

  const Index begin = basis.sector_offset(lo);
  const Index end = basis.sector_offset(*top);
#pragma omp parallel for if (end - begin > kParallelThreshold) schedule(static)
  for (Index m = begin; m < end; ++m) {
    const auto occ = basis.occupation(m);
    Complex sum = 0.0;
    for (int j = 0; j < d; ++j) {
      sum += fv[j] * basis.ladder_factor(occ[j] + 1) * in[basis.raised(m, j)];
    }
    out[m] = sum;
  }
  return FockVector(phi.basis_ptr(), std::move(out));
}

FockVector build_cyclic_vector(std::span<const OneParticleVector> fs, const BasisPtr& basis) {
  if (static_cast<int>(fs.size()) > basis->n_max()) {
    throw TruncationOverflow("build_cyclic_vector: " + std::to_string(fs.size()) +
                             " creators exceed n_max = " + std::to_string(basis->n_max()));
  }
  FockVector state = FockVector::vacuum(basis);
  for (const auto& f : fs) state = apply_create(f, state);
  return state;
}

double alpha_norm(const FockVector& phi, double alpha) {
  double sum = 0.0;
  for (int n = 0; n <= phi.basis().n_max(); ++n) {
    const double w = std::pow(static_cast<double>(n + 1), 2.0 * alpha);
    sum += w * phi.block(n).squaredNorm();
  }
  return std::sqrt(sum);
}

FockVector apply_number_power(const FockVector& phi, double alpha, double shift) {
  if (alpha < 0.0 || shift < 0.0) {
    throw std::invalid_argument("apply_number_power: alpha and shift must be nonnegative");
  }
  const FockBasis& basis = phi.basis();
  CVector out = phi.coefficients();
  for (int n = 0; n <= basis.n_max(); ++n) {
    const double w = std::pow(static_cast<double>(n) + shift, alpha);
    out.segment(basis.sector_offset(n), basis.sector_size(n)) *= w;
  }
  return FockVector(phi.basis_ptr(), std::move(out));
}

}  // namespace fockbound
