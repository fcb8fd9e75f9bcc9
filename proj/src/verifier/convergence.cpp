#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "common.hpp"
#include "fockbound/errors.hpp"
#include "fockbound/ladder.hpp"
#include "fockbound/verifier.hpp"

namespace fockbound {

ConvergenceCurve convergence_curve(const QuadraticOperatorSpec& complete_spec,
                                   const FockVector& phi, std::span<const int> m_grid,
                                   std::uint64_t seed) {
  ConvergenceCurve curve;
  curve.family = std::string(to_string(complete_spec.kind));
  curve.d = phi.basis().modes();
  curve.n_max = phi.basis().n_max();
  curve.seed = seed;
  const FockVector full = apply_partial(complete_spec, phi);
  for (int m : m_grid) {
    curve.m_values.push_back(m);
    curve.errors.push_back((apply_partial(complete_spec.with_M(m), phi) - full).norm());
  }
  return curve;
}

double diagonal_tail_error(QuadraticKind kind, std::span<const double> diagonal,
                           const FockVector& phi, int M) {
  const FockBasis& basis = phi.basis();
  const int d = basis.modes();
  if (static_cast<int>(diagonal.size()) != d) {
    throw DimensionMismatch("diagonal_tail_error: diagonal length differs from d");
  }
  CVector tail = CVector::Zero(basis.dim());
  std::vector<int> occ;
  for (Index s = 0; s < basis.dim(); ++s) {
    const Complex c = phi[s];
    if (c == Complex(0.0)) continue;
    occ = basis.occupation_of(s);
    for (int j = M; j < d; ++j) {
      const double n = occ[j];
      switch (kind) {
        case QuadraticKind::Number:
        case QuadraticKind::DGamma:
          tail[s] += diagonal[j] * n * c;
          break;
        case QuadraticKind::Delta:
          if (occ[j] < 2) break;
          occ[j] -= 2;
          tail[basis.index_of(occ)] += diagonal[j] * std::sqrt(n * (n - 1.0)) * c;
          occ[j] += 2;
          break;
        case QuadraticKind::DeltaPlus:
          occ[j] += 2;
          tail[basis.index_of(occ)] += diagonal[j] * std::sqrt((n + 1.0) * (n + 2.0)) * c;
          occ[j] -= 2;
          break;
      }
    }
  }
  return tail.norm();
}

std::string_view to_string(WitnessFamily family) {
  switch (family) {
    case WitnessFamily::B: return "B";
    case WitnessFamily::A: return "A";
    case WitnessFamily::C: return "C";
  }
  return "unknown";
}

std::optional<WitnessFamily> parse_witness_family(std::string_view name) {
  if (name == "B" || name == "b" || name == "dgamma") return WitnessFamily::B;
  if (name == "A" || name == "a" || name == "delta") return WitnessFamily::A;
  if (name == "C" || name == "c" || name == "deltaplus") return WitnessFamily::C;
  return std::nullopt;
}

ConvergenceCurve divergence_witness(WitnessFamily family, const std::function<double(int)>& entry,
                                    std::span<const int> grid,
                                    const FockBasis::LadderFactor& factor) {
  if (grid.empty()) throw std::invalid_argument("divergence_witness: empty grid");
  const int d = *std::max_element(grid.begin(), grid.end());
  if (*std::min_element(grid.begin(), grid.end()) < 1) {
    throw std::invalid_argument("divergence_witness: grid entries must be >= 1");
  }
  std::vector<Complex> diag(d);
  for (int j = 0; j < d; ++j) diag[j] = entry(j + 1);
  const OneParticleOperator coeff = OneParticleOperator::diagonal(diag);
  const OrthonormalSystem ons = OrthonormalSystem::canonical(d);
  const BasisPtr basis = build_basis(d, 2, factor);
  const FockVector vacuum = FockVector::vacuum(basis);

  ConvergenceCurve curve;
  curve.family = std::string(to_string(family));
  curve.d = d;
  curve.n_max = 2;
  for (int m : grid) {
    curve.m_values.push_back(m);
    switch (family) {
      case WitnessFamily::B: {
        const auto spec = QuadraticOperatorSpec::dgamma(coeff, ons, m);
        curve.errors.push_back(operator_norm(assemble_sector_matrix(spec, basis, 1)));
        curve.reference.push_back(operator_norm(CMatrix(coeff.entries() * ons.projector(m))));
        break;
      }
      case WitnessFamily::A: {
        const auto spec = QuadraticOperatorSpec::delta(coeff, ons, m);
        const CMatrix row = assemble_sector_matrix(spec, basis, 2);
        CVector coeffs = CVector::Zero(basis->dim());
        coeffs.segment(basis->sector_offset(2), basis->sector_size(2)) = row.adjoint();
        FockVector phi(basis, coeffs);
        phi = (1.0 / phi.norm()) * phi;
        curve.errors.push_back(apply_partial(spec, phi).norm());
        curve.reference.push_back(std::sqrt(omega_formula(coeff, ons, m)));
        break;
      }
      case WitnessFamily::C: {
        const auto spec = QuadraticOperatorSpec::delta_plus(coeff, ons, m);
        curve.errors.push_back(apply_partial(spec, vacuum).squared_norm());
        curve.reference.push_back(vacuum_pair_norm_formula(coeff, ons, 1, m));
        break;
      }
    }
  }
  return curve;
}

bool witness_diverges(const ConvergenceCurve& curve) {
  const auto& v = curve.errors;
  if (v.size() < 2) return false;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) return false;
  return v.front() > 0.0 && v.back() / v.front() >= 2.0;
}

}  // namespace fockbound
