#include "fockbound/quadratic.hpp"

#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include "fockbound/errors.hpp"
#include "fockbound/ladder.hpp"

namespace fockbound {
namespace {

using LadderFn = FockVector (*)(const OneParticleVector&, const FockVector&);

struct LadderBackend {
  LadderFn create;
  LadderFn annihilate;
};

constexpr LadderBackend kParallel{&fockbound::apply_create, &fockbound::apply_annihilate};
constexpr LadderBackend kSerial{&serial::apply_create, &serial::apply_annihilate};

FockVector apply_partial_with(const QuadraticOperatorSpec& spec, const FockVector& phi,
                              const LadderBackend& ladder) {
  spec.validate();
  if (spec.ons.dim() != phi.basis().modes()) {
    throw DimensionMismatch("apply_partial: operator dimension differs from mode count");
  }
  if (spec.kind == QuadraticKind::DeltaPlus) {
    const auto top = phi.top_sector();
    if (top && *top > phi.basis().n_max() - 2) {
      throw TruncationOverflow("apply_partial: Delta+ needs top_sector <= n_max - 2");
    }
  }

  FockVector result(phi.basis_ptr());
  for (int j = 0; j < spec.M; ++j) {
    const OneParticleVector e = spec.ons.vector(j);
    const OneParticleVector e_bar = e.conjugate();
    const OneParticleVector ce = spec.coeff * e;
    switch (spec.kind) {
      case QuadraticKind::Number:
      case QuadraticKind::DGamma:
        result = result + ladder.create(ce, ladder.annihilate(e_bar, phi));
        break;
      case QuadraticKind::Delta:
        result = result + ladder.annihilate(ce, ladder.annihilate(e_bar, phi));
        break;
      case QuadraticKind::DeltaPlus:
        result = result + ladder.create(ce, ladder.create(e_bar, phi));
        break;
    }
  }
  return result;
}

void check_sector_range(const FockBasis& basis, int n_from, int n_to) {
  if (n_from < 0 || n_from > basis.n_max()) {
    throw std::out_of_range("sector " + std::to_string(n_from) + " outside truncation");
  }
  if (n_to > basis.n_max()) {
    throw TruncationOverflow("image sector " + std::to_string(n_to) + " exceeds n_max = " +
                             std::to_string(basis.n_max()));
  }
}

CMatrix assemble_with(const BasisPtr& basis, int n_from, int n_to, const LinearMap& map,
                      bool parallel) {
  check_sector_range(*basis, n_from, n_to);
  const Index cols = basis->sector_size(n_from);
  if (n_to < 0) return CMatrix(0, cols);
  const Index rows = basis->sector_size(n_to);
  const Index from_offset = basis->sector_offset(n_from);
  const Index to_offset = basis->sector_offset(n_to);

  CMatrix out(rows, cols);
  std::exception_ptr failure;
#pragma omp parallel for if (parallel && cols > 1) schedule(dynamic)
  for (Index c = 0; c < cols; ++c) {
    try {
      const FockVector image = map(FockVector::basis_state(basis, from_offset + c));
      out.col(c) = image.coefficients().segment(to_offset, rows);
    } catch (...) {
#pragma omp critical(fockbound_assemble_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

std::string_view to_string(QuadraticKind kind) {
  switch (kind) {
    case QuadraticKind::Number: return "number";
    case QuadraticKind::DGamma: return "dgamma";
    case QuadraticKind::Delta: return "delta";
    case QuadraticKind::DeltaPlus: return "deltaplus";
  }
  return "unknown";
}

std::optional<QuadraticKind> parse_quadratic_kind(std::string_view name) {
  for (auto k : {QuadraticKind::Number, QuadraticKind::DGamma, QuadraticKind::Delta,
                 QuadraticKind::DeltaPlus}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

int sector_shift(QuadraticKind kind) {
  switch (kind) {
    case QuadraticKind::Delta: return -2;
    case QuadraticKind::DeltaPlus: return 2;
    default: return 0;
  }
}

QuadraticOperatorSpec QuadraticOperatorSpec::number(OrthonormalSystem ons, int M) {
  const int d = ons.dim();
  QuadraticOperatorSpec s{QuadraticKind::Number, OneParticleOperator::identity(d), std::move(ons), M};
  s.validate();
  return s;
}

QuadraticOperatorSpec QuadraticOperatorSpec::dgamma(OneParticleOperator b, OrthonormalSystem ons,
                                                    int M) {
  QuadraticOperatorSpec s{QuadraticKind::DGamma, std::move(b), std::move(ons), M};
  s.validate();
  return s;
}

QuadraticOperatorSpec QuadraticOperatorSpec::delta(OneParticleOperator a, OrthonormalSystem ons,
                                                   int M) {
  QuadraticOperatorSpec s{QuadraticKind::Delta, std::move(a), std::move(ons), M};
  s.validate();
  return s;
}

QuadraticOperatorSpec QuadraticOperatorSpec::delta_plus(OneParticleOperator c,
                                                        OrthonormalSystem ons, int M) {
  QuadraticOperatorSpec s{QuadraticKind::DeltaPlus, std::move(c), std::move(ons), M};
  s.validate();
  return s;
}

QuadraticOperatorSpec QuadraticOperatorSpec::complete(QuadraticKind kind, OneParticleOperator coeff,
                                                      OrthonormalSystem ons) {
  const int m = ons.size();
  if (kind == QuadraticKind::Number) return number(std::move(ons), m);
  QuadraticOperatorSpec s{kind, std::move(coeff), std::move(ons), m};
  s.validate();
  return s;
}

QuadraticOperatorSpec QuadraticOperatorSpec::with_M(int m) const {
  QuadraticOperatorSpec s = *this;
  s.M = m;
  s.validate();
  return s;
}

void QuadraticOperatorSpec::validate() const {
  if (M < 0 || M > ons.size()) {
    throw std::invalid_argument("QuadraticOperatorSpec: M = " + std::to_string(M) +
                                " outside [0, " + std::to_string(ons.size()) + "]");
  }
  if (coeff.dim() != ons.dim()) {
    throw DimensionMismatch("QuadraticOperatorSpec: coefficient and ONS dimensions differ");
  }
}

FockVector apply_partial(const QuadraticOperatorSpec& spec, const FockVector& phi) {
  return apply_partial_with(spec, phi, kParallel);
}

CMatrix assemble_map_matrix(const BasisPtr& basis, int n_from, int n_to, const LinearMap& map) {
  return assemble_with(basis, n_from, n_to, map, true);
}

CMatrix assemble_sector_matrix(const QuadraticOperatorSpec& spec, const BasisPtr& basis,
                               int n_from) {
  spec.validate();
  return assemble_with(basis, n_from, n_from + sector_shift(spec.kind),
                       [&spec](const FockVector& v) { return apply_partial(spec, v); }, true);
}

namespace serial {

FockVector apply_partial(const QuadraticOperatorSpec& spec, const FockVector& phi) {
  return apply_partial_with(spec, phi, kSerial);
}

CMatrix assemble_sector_matrix(const QuadraticOperatorSpec& spec, const BasisPtr& basis,
                               int n_from) {
  spec.validate();
  return assemble_with(basis, n_from, n_from + sector_shift(spec.kind),
                       [&spec](const FockVector& v) { return serial::apply_partial(spec, v); },
                       false);
}

}  // namespace serial

FockVector dgamma_cyclic_oracle(const OneParticleOperator& b, std::span<const OneParticleVector> fs,
                                const BasisPtr& basis) {
  if (static_cast<int>(fs.size()) > basis->n_max()) {
    throw TruncationOverflow("dgamma_cyclic_oracle: more creators than n_max");
  }
  FockVector result(basis);
  std::vector<OneParticleVector> factors(fs.begin(), fs.end());
  for (std::size_t k = 0; k < fs.size(); ++k) {
    factors[k] = b * fs[k];
    result = result + build_cyclic_vector(factors, basis);
    factors[k] = fs[k];
  }
  return result;
}

FockVector delta_cyclic_oracle(const OneParticleOperator& a, std::span<const OneParticleVector> gs,
                               const BasisPtr& basis) {
  const std::size_t n = gs.size();
  FockVector result(basis);
  if (n < 2) return result;
  if (static_cast<int>(n) - 2 > basis->n_max()) {
    throw TruncationOverflow("delta_cyclic_oracle: remaining creators exceed n_max");
  }
  std::vector<OneParticleVector> rest;
  rest.reserve(n - 2);
  for (std::size_t k = 0; k < n; ++k) {
    const OneParticleVector agk = a * gs[k];
    for (std::size_t l = 0; l < n; ++l) {
      if (l == k) continue;
      rest.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (i != k && i != l) rest.push_back(gs[i]);
      result = result + conjugate_pairing(gs[l], agk) * build_cyclic_vector(rest, basis);
    }
  }
  return result;
}

double vacuum_pair_norm_formula(const OneParticleOperator& c, const OrthonormalSystem& ons, int m1,
                                int m2) {
  if (c.dim() != ons.dim()) throw DimensionMismatch("vacuum_pair_norm_formula: dimensions");
  if (m1 < 1 || m2 > ons.size() || m1 > m2 + 1) {
    throw std::out_of_range("vacuum_pair_norm_formula: need 1 <= M1 <= M2 + 1, M2 <= M");
  }
  if (m1 == m2 + 1) return 0.0;
  const auto e = ons.columns().middleCols(m1 - 1, m2 - m1 + 1);
  const CMatrix f = c.entries() * e;  // columns C e_j
  // x_jk = (conj e_j, C e_k); the second factor (C e_j, conj e_k) is conj(x_kj)
  const CMatrix x = e.transpose() * f;
  const Complex cross = (x.array() * x.transpose().conjugate().array()).sum();
  return f.squaredNorm() + cross.real();
}

double omega_formula(const OneParticleOperator& a, const OrthonormalSystem& ons, int M) {
  if (a.dim() != ons.dim()) throw DimensionMismatch("omega_formula: dimensions");
  if (M < 0 || M > ons.size()) throw std::out_of_range("omega_formula: M outside ONS");
  const double scale = std::max(1.0, a.entries().cwiseAbs().maxCoeff());
  if ((a.transpose().entries() - a.entries()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("omega_formula: A is not symmetric (A^T != A)");
  }
  if (M == 0) return 0.0;
  const auto e = ons.columns().leftCols(M);
  const CMatrix f = a.entries() * e;
  const CMatrix z = f.adjoint() * e.conjugate();  // (A e_j, conj e_k)
  return z.squaredNorm() + f.squaredNorm();
}

}  // namespace fockbound
