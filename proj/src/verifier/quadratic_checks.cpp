#include <cmath>
#include <string>
#include <vector>

#include "common.hpp"
#include "fockbound/ladder.hpp"
#include "fockbound/quadratic.hpp"
#include "fockbound/verifier.hpp"

namespace fockbound {

using detail::MaxTracker;
using detail::relative;

namespace {

OrthonormalSystem complete_ons(int d, Rng& rng) {
  return random_orthonormal_system(d, d, rng.next_u64());
}

double matrix_mismatch(const CMatrix& x, const CMatrix& y) {
  return relative((x - y).norm(), std::max(x.norm(), y.norm()));
}

}  // namespace

std::vector<CheckResult> check_cross_paths(const BasisPtr& basis, int samples, std::uint64_t seed,
                                           const ToleranceConfig& tol) {
  Rng rng(seed);
  const int d = basis->modes();
  const int top = std::min(4, basis->n_max());
  MaxTracker dgamma, delta, number, vacuum;
  for (int s = 0; s < samples; ++s) {
    const int n = rng.uniform_int(0, top);
    const std::string label = "sample=" + std::to_string(s) + " n=" + std::to_string(n);
    const auto fs = detail::random_vectors(n, d, rng);
    const FockVector psi = build_cyclic_vector(fs, basis);
    const OrthonormalSystem ons = complete_ons(d, rng);

    const auto b = OneParticleOperator::random(d, rng);
    const FockVector via_sum = apply_partial(QuadraticOperatorSpec::dgamma(b, ons, d), psi);
    const FockVector via_oracle = dgamma_cyclic_oracle(b, fs, basis);
    dgamma.update(relative((via_sum - via_oracle).norm(), hs_norm(b) * std::max(n, 1) * psi.norm()),
                  label);

    const auto a = OneParticleOperator::random(d, rng);
    const FockVector d_sum = apply_partial(QuadraticOperatorSpec::delta(a, ons, d), psi);
    const FockVector d_oracle = delta_cyclic_oracle(a, fs, basis);
    delta.update(relative((d_sum - d_oracle).norm(), hs_norm(a) * std::max(n, 1) * psi.norm()),
                 label);

    const FockVector n_sum = apply_partial(QuadraticOperatorSpec::number(ons, d), psi);
    number.update(relative((n_sum - double(n) * psi).norm(), std::max(n, 1) * psi.norm()), label);

    vacuum.update(
        apply_partial(QuadraticOperatorSpec::dgamma(b, ons, d), FockVector::vacuum(basis)).norm(),
        label);
  }
  return {make_check("cross_path.dgamma", dgamma.value, tol.identity_rel_tol, dgamma.witness),
          make_check("cross_path.delta", delta.value, tol.identity_rel_tol, delta.witness),
          make_check("cross_path.number_eigenvalue", number.value, tol.identity_rel_tol,
                     number.witness),
          make_check("cross_path.dgamma_vacuum", vacuum.value, 0.0, vacuum.witness)};
}

std::vector<CheckResult> check_adjoint_relations(const BasisPtr& basis, int samples,
                                                 std::uint64_t seed) {
  Rng rng(seed);
  const int d = basis->modes();
  const int n_max = basis->n_max();
  MaxTracker dgamma, pair_adjoint, delta_t, deltaplus_t;
  for (int s = 0; s < samples; ++s) {
    const OrthonormalSystem ons = complete_ons(d, rng);
    const auto b = OneParticleOperator::random(d, rng);
    const auto a = OneParticleOperator::random(d, rng);
    const auto c = OneParticleOperator::random(d, rng);
    const auto c_sym = OneParticleOperator::random_symmetric(d, rng);
    const std::string label = "sample=" + std::to_string(s);

    const auto spec_b = QuadraticOperatorSpec::dgamma(b, ons, d);
    const auto spec_b_adj = QuadraticOperatorSpec::dgamma(b.adjoint(), ons, d);
    for (int n = 0; n <= n_max; ++n) {
      const CMatrix x = assemble_sector_matrix(spec_b, basis, n);
      const CMatrix y = assemble_sector_matrix(spec_b_adj, basis, n);
      dgamma.update(matrix_mismatch(x.adjoint(), y), label + " sector=" + std::to_string(n));
    }

    const auto spec_plus = QuadraticOperatorSpec::delta_plus(c_sym, ons, d);
    const auto spec_minus = QuadraticOperatorSpec::delta(c_sym.adjoint(), ons, d);
    for (int n = 0; n + 2 <= n_max; ++n) {
      const CMatrix up = assemble_sector_matrix(spec_plus, basis, n);
      const CMatrix down = assemble_sector_matrix(spec_minus, basis, n + 2);
      pair_adjoint.update(matrix_mismatch(up, down.adjoint()),
                          label + " sector=" + std::to_string(n));
    }

    const auto spec_a = QuadraticOperatorSpec::delta(a, ons, d);
    const auto spec_at = QuadraticOperatorSpec::delta(a.transpose(), ons, d);
    for (int n = 2; n <= n_max; ++n) {
      delta_t.update(matrix_mismatch(assemble_sector_matrix(spec_a, basis, n),
                                     assemble_sector_matrix(spec_at, basis, n)),
                     label + " sector=" + std::to_string(n));
    }

    const auto spec_c = QuadraticOperatorSpec::delta_plus(c, ons, d);
    const auto spec_ct = QuadraticOperatorSpec::delta_plus(c.transpose(), ons, d);
    for (int n = 0; n + 2 <= n_max; ++n) {
      deltaplus_t.update(matrix_mismatch(assemble_sector_matrix(spec_c, basis, n),
                                         assemble_sector_matrix(spec_ct, basis, n)),
                         label + " sector=" + std::to_string(n));
    }
  }
  return {make_check("adjoint.dgamma", dgamma.value, kMatrixRelTol, dgamma.witness),
          make_check("adjoint.deltaplus_delta", pair_adjoint.value, kMatrixRelTol,
                     pair_adjoint.witness),
          make_check("symmetry.delta_transpose", delta_t.value, kMatrixRelTol, delta_t.witness),
          make_check("symmetry.deltaplus_transpose", deltaplus_t.value, kMatrixRelTol,
                     deltaplus_t.witness)};
}

std::vector<CheckResult> check_ons_independence(const BasisPtr& basis, int samples,
                                                std::uint64_t seed) {
  Rng rng(seed);
  const int d = basis->modes();
  std::vector<CheckResult> out;
  for (auto kind : {QuadraticKind::Number, QuadraticKind::DGamma, QuadraticKind::Delta,
                    QuadraticKind::DeltaPlus}) {
    MaxTracker worst;
    const int top = kind == QuadraticKind::DeltaPlus ? basis->n_max() - 2 : basis->n_max();
    for (int s = 0; s < samples; ++s) {
      const auto coeff = OneParticleOperator::random(d, rng);
      const OrthonormalSystem first = complete_ons(d, rng);
      const OrthonormalSystem second = complete_ons(d, rng);
      const FockVector phi = random_state(basis, rng, 0, top);
      const FockVector x = apply_partial(QuadraticOperatorSpec::complete(kind, coeff, first), phi);
      const FockVector y = apply_partial(QuadraticOperatorSpec::complete(kind, coeff, second), phi);
      worst.update(relative((x - y).norm(), std::max(x.norm(), y.norm())),
                   "sample=" + std::to_string(s));
    }
    out.push_back(make_check("ons_independence." + std::string(to_string(kind)), worst.value,
                             kMatrixRelTol, worst.witness));
  }
  return out;
}

std::vector<CheckResult> check_pair_formulas(const BasisPtr& basis, int samples,
                                             std::uint64_t seed, const ToleranceConfig& tol) {
  Rng rng(seed);
  const int d = basis->modes();
  const FockVector omega_state = FockVector::vacuum(basis);
  MaxTracker omega_norm, omega_eigen, omega_pair, vacuum_pair;
  for (int s = 0; s < samples; ++s) {
    const OrthonormalSystem ons = complete_ons(d, rng);
    const int m = rng.uniform_int(1, d);
    const std::string label = "sample=" + std::to_string(s) + " M=" + std::to_string(m);

    const auto a = OneParticleOperator::random_symmetric(d, rng);
    const double omega = omega_formula(a, ons, m);
    const auto spec = QuadraticOperatorSpec::delta(a, ons, m);
    // Delta_M(A)^* Omega lies in sector 2 with coefficients conj of the 2 -> 0 row
    const CMatrix row = assemble_sector_matrix(spec, basis, 2);
    CVector coeffs = CVector::Zero(basis->dim());
    coeffs.segment(basis->sector_offset(2), basis->sector_size(2)) = row.adjoint();
    const FockVector adj_omega(basis, coeffs);
    omega_norm.update(relative(std::abs(adj_omega.squared_norm() - omega), omega), label);
    const FockVector back = apply_partial(spec, adj_omega);
    omega_eigen.update(relative((back - Complex(omega) * omega_state).norm(), omega), label);
    omega_pair.update(
        relative(std::abs(vacuum_pair_norm_formula(a.adjoint(), ons.conjugate(), 1, m) - omega),
                 omega),
        label);

    const auto c = OneParticleOperator::random(d, rng);
    const int m1 = rng.uniform_int(1, m);
    const auto spec_c = QuadraticOperatorSpec::delta_plus(c, ons, m);
    const FockVector upper = apply_partial(spec_c, omega_state);
    const FockVector lower = apply_partial(spec_c.with_M(m1 - 1), omega_state);
    const double fock = (upper - lower).squared_norm();
    const double formula = vacuum_pair_norm_formula(c, ons, m1, m);
    vacuum_pair.update(relative(std::abs(fock - formula), fock),
                       label + " M1=" + std::to_string(m1));
  }
  return {make_check("pair.omega_norm", omega_norm.value, tol.identity_rel_tol, omega_norm.witness),
          make_check("pair.omega_eigenvector", omega_eigen.value, tol.identity_rel_tol,
                     omega_eigen.witness),
          make_check("pair.omega_vacuum_formula", omega_pair.value, tol.identity_rel_tol,
                     omega_pair.witness),
          make_check("pair.vacuum_formula", vacuum_pair.value, tol.identity_rel_tol,
                     vacuum_pair.witness)};
}

}  // namespace fockbound
