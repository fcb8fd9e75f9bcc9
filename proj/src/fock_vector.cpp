#include "fockbound/fock_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fockbound/errors.hpp"

namespace fockbound {
namespace {

void require_same_space(const FockVector& a, const FockVector& b) {
  if (!same_space(a.basis(), b.basis())) throw DimensionMismatch("FockVector: different bases");
}

}  // namespace

bool same_space(const FockBasis& a, const FockBasis& b) {
  return &a == &b || (a.modes() == b.modes() && a.n_max() == b.n_max());
}

FockVector::FockVector(BasisPtr basis)
    : basis_(std::move(basis)), coefficients_(CVector::Zero(basis_->dim())) {}

FockVector::FockVector(BasisPtr basis, CVector coefficients)
    : basis_(std::move(basis)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != basis_->dim()) {
    throw DimensionMismatch("FockVector: coefficient length differs from basis dimension");
  }
}

FockVector FockVector::vacuum(BasisPtr basis) { return basis_state(std::move(basis), 0); }

FockVector FockVector::basis_state(BasisPtr basis, Index idx) {
  if (idx < 0 || idx >= basis->dim()) throw std::out_of_range("basis_state: bad index");
  CVector c = CVector::Zero(basis->dim());
  c[idx] = 1.0;
  return FockVector(std::move(basis), std::move(c));
}

FockVector FockVector::from_occupation(BasisPtr basis, std::span<const int> occupation) {
  const Index idx = basis->index_of(occupation);
  return basis_state(std::move(basis), idx);
}

Complex FockVector::at(std::span<const int> occupation) const {
  return coefficients_[basis_->index_of(occupation)];
}

double FockVector::squared_norm() const {
  double sum = 0.0;
  for (int n = 0; n <= basis_->n_max(); ++n) sum += block(n).squaredNorm();
  return sum;
}

double FockVector::norm() const { return std::sqrt(squared_norm()); }

std::optional<int> FockVector::top_sector() const {
  for (int n = basis_->n_max(); n >= 0; --n) {
    const auto b = block(n);
    for (Index i = 0; i < b.size(); ++i)
      if (b[i] != Complex(0.0)) return n;
  }
  return std::nullopt;
}

std::optional<int> FockVector::bottom_sector() const {
  for (int n = 0; n <= basis_->n_max(); ++n) {
    const auto b = block(n);
    for (Index i = 0; i < b.size(); ++i)
      if (b[i] != Complex(0.0)) return n;
  }
  return std::nullopt;
}

FockVector FockVector::restricted_to_sector(int n) const {
  CVector c = CVector::Zero(basis_->dim());
  c.segment(basis_->sector_offset(n), basis_->sector_size(n)) = block(n);
  return FockVector(basis_, std::move(c));
}

FockVector operator+(const FockVector& a, const FockVector& b) {
  require_same_space(a, b);
  return FockVector(a.basis_, CVector(a.coefficients_ + b.coefficients_));
}

FockVector operator-(const FockVector& a, const FockVector& b) {
  require_same_space(a, b);
  return FockVector(a.basis_, CVector(a.coefficients_ - b.coefficients_));
}

FockVector operator*(Complex s, const FockVector& v) {
  return FockVector(v.basis_, CVector(s * v.coefficients_));
}

Complex inner_product(const FockVector& phi, const FockVector& psi) {
  require_same_space(phi, psi);
  return phi.coefficients().dot(psi.coefficients());
}

FockVector random_state(const BasisPtr& basis, Rng& rng, int lo, int hi) {
  if (lo < 0 || hi > basis->n_max() || lo > hi) {
    throw std::invalid_argument("random_state: sector range outside truncation");
  }
  std::vector<bool> keep(hi - lo + 1);
  bool any = false;
  for (auto&& k : keep) {
    k = rng.uniform() < 0.5;
    any = any || k;
  }
  if (!any) keep[rng.uniform_int(0, hi - lo)] = true;

  CVector c = CVector::Zero(basis->dim());
  for (int n = lo; n <= hi; ++n) {
    if (!keep[n - lo]) continue;
    for (Index i = basis->sector_offset(n); i < basis->sector_offset(n + 1); ++i) {
      c[i] = rng.complex_normal();
    }
  }
  c /= c.norm();
  return FockVector(basis, std::move(c));
}

FockVector random_sector_state(const BasisPtr& basis, Rng& rng, int n) {
  if (n < 0 || n > basis->n_max()) throw std::invalid_argument("random_sector_state: bad sector");
  CVector c = CVector::Zero(basis->dim());
  for (Index i = basis->sector_offset(n); i < basis->sector_offset(n + 1); ++i) {
    c[i] = rng.complex_normal();
  }
  c /= c.norm();
  return FockVector(basis, std::move(c));
}

}  // namespace fockbound
