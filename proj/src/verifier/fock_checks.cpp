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

void ToleranceConfig::validate() const {
  for (double t : {identity_rel_tol, psd_eig_tol, bound_slack}) {
    if (!std::isfinite(t) || t < 0.0) {
      throw std::invalid_argument("ToleranceConfig: tolerances must be finite and >= 0");
    }
  }
}

CheckResult make_check(std::string name, double residual, double tolerance, std::string witness) {
  CheckResult r;
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;  // false for NaN
  r.witness = std::move(witness);
  return r;
}

std::vector<CheckResult> check_ccr(const BasisPtr& basis, int samples, std::uint64_t seed,
                                   const ToleranceConfig& tol) {
  Rng rng(seed);
  const int d = basis->modes();
  const int top = basis->n_max() - 2;
  MaxTracker aa, cc, ac;
  for (int s = 0; s < samples; ++s) {
    const auto f = OneParticleVector::random(d, rng);
    const auto g = OneParticleVector::random(d, rng);
    const FockVector phi = random_state(basis, rng, 0, top);
    const double scale = f.norm() * g.norm() * phi.norm();
    const std::string label = "sample=" + std::to_string(s);

    const FockVector r_aa =
        apply_annihilate(f, apply_annihilate(g, phi)) - apply_annihilate(g, apply_annihilate(f, phi));
    aa.update(relative(r_aa.norm(), scale), label);

    const FockVector r_cc =
        apply_create(f, apply_create(g, phi)) - apply_create(g, apply_create(f, phi));
    cc.update(relative(r_cc.norm(), scale), label);

    const FockVector r_ac = apply_annihilate(f, apply_create(g, phi)) -
                            apply_create(g, apply_annihilate(f, phi)) -
                            conjugate_pairing(f, g) * phi;
    ac.update(relative(r_ac.norm(), scale), label);
  }
  return {make_check("ccr.annihilate_annihilate", aa.value, tol.identity_rel_tol, aa.witness),
          make_check("ccr.create_create", cc.value, tol.identity_rel_tol, cc.witness),
          make_check("ccr.annihilate_create", ac.value, tol.identity_rel_tol, ac.witness)};
}

CheckResult check_vacuum(const BasisPtr& basis, int samples, std::uint64_t seed) {
  Rng rng(seed);
  MaxTracker worst;
  const FockVector omega = FockVector::vacuum(basis);
  for (int s = 0; s < samples; ++s) {
    const auto f = OneParticleVector::random(basis->modes(), rng);
    worst.update(apply_annihilate(f, omega).norm(), "sample=" + std::to_string(s));
  }
  return make_check("fock.vacuum_annihilated", worst.value, 0.0, worst.witness);
}

CheckResult check_unitarity(const BasisPtr& basis, int samples, std::uint64_t seed,
                            const ToleranceConfig& tol) {
  Rng rng(seed);
  MaxTracker worst;
  for (int s = 0; s < samples; ++s) {
    const auto f = OneParticleVector::random(basis->modes(), rng);
    const FockVector phi = random_state(basis, rng, 0, basis->n_max());
    const FockVector psi = random_state(basis, rng, 0, basis->n_max() - 1);
    const Complex lhs = inner_product(apply_annihilate(f, phi), psi);
    const Complex rhs = inner_product(phi, apply_create(f.conjugate(), psi));
    const double scale = f.norm() * alpha_norm(phi, 0.5) * psi.norm();
    worst.update(relative(std::abs(lhs - rhs), scale), "sample=" + std::to_string(s));
  }
  return make_check("fock.unitarity", worst.value, tol.identity_rel_tol, worst.witness);
}

std::vector<CheckResult> check_sector_ladder_norms(const BasisPtr& basis, int max_n, int samples,
                                                   std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckResult> out;
  for (int n = 1; n <= max_n && n <= basis->n_max(); ++n) {
    MaxTracker ann, cre;
    const bool can_create = n + 1 <= basis->n_max();
    for (int s = 0; s < samples; ++s) {
      const auto f = OneParticleVector::random(basis->modes(), rng);
      const std::string label = "sample=" + std::to_string(s);
      const CMatrix a = assemble_map_matrix(
          basis, n, n - 1, [&f](const FockVector& v) { return apply_annihilate(f, v); });
      ann.update(std::abs(operator_norm(a) - std::sqrt(double(n)) * f.norm()), label);
      if (can_create) {
        const CMatrix c = assemble_map_matrix(
            basis, n, n + 1, [&f](const FockVector& v) { return apply_create(f, v); });
        cre.update(std::abs(operator_norm(c) - std::sqrt(double(n + 1)) * f.norm()), label);
      }
    }
    out.push_back(make_check("ladder.sector_norm.annihilate.n" + std::to_string(n), ann.value,
                             kSectorNormTol, ann.witness));
    if (can_create) {
      out.push_back(make_check("ladder.sector_norm.create.n" + std::to_string(n), cre.value,
                               kSectorNormTol, cre.witness));
    }
  }
  return out;
}

CheckResult check_create_norm_attained(const BasisPtr& basis, int samples, std::uint64_t seed) {
  Rng rng(seed);
  MaxTracker worst;
  for (int s = 0; s < samples; ++s) {
    const auto f = OneParticleVector::random(basis->modes(), rng);
    FockVector power = FockVector::vacuum(basis);      // a^dagger(f)^n Omega
    FockVector power_bar = FockVector::vacuum(basis);  // a^dagger(conj f)^n Omega
    for (int n = 0; n < basis->n_max(); ++n) {
      const std::string label = "sample=" + std::to_string(s) + " n=" + std::to_string(n);
      const FockVector phi = (1.0 / power.norm()) * power;
      worst.update(relative(std::abs(apply_create(f, phi).norm() - std::sqrt(n + 1.0) * f.norm()),
                            f.norm()),
                   label);
      const FockVector phi_bar = (1.0 / power_bar.norm()) * power_bar;
      worst.update(relative(std::abs(apply_annihilate(f, phi_bar).norm() -
                                     std::sqrt(double(n)) * f.norm()),
                            f.norm()),
                   label);
      power = apply_create(f, power);
      power_bar = apply_create(f.conjugate(), power_bar);
    }
  }
  return make_check("ladder.sector_norm.attained", worst.value, kSectorNormTol, worst.witness);
}

CheckResult check_scalar_product(const BasisPtr& basis, int max_n, int samples, std::uint64_t seed,
                                 const ToleranceConfig& tol) {
  Rng rng(seed);
  const int d = basis->modes();
  const int top = std::min(max_n, std::min(basis->n_max(), kPermanentMaxOrder));
  MaxTracker worst;
  for (int s = 0; s < samples; ++s) {
    const int n = rng.uniform_int(0, top);
    const auto fs = detail::random_vectors(n, d, rng);
    const auto gs = detail::random_vectors(n, d, rng);
    const FockVector psi_f = build_cyclic_vector(fs, basis);
    const FockVector psi_g = build_cyclic_vector(gs, basis);
    CMatrix gram(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) gram(j, k) = inner_product(fs[j], gs[k]);
    const Complex fock = inner_product(psi_f, psi_g);
    worst.update(relative(std::abs(fock - permanent(gram)), psi_f.norm() * psi_g.norm()),
                 "sample=" + std::to_string(s) + " n=" + std::to_string(n));
  }
  return make_check("fock.scalar_product_permanent", worst.value, tol.identity_rel_tol,
                    worst.witness);
}

std::vector<CheckResult> check_alpha_norms(const BasisPtr& basis, int samples, std::uint64_t seed,
                                           const ToleranceConfig& tol) {
  Rng rng(seed);
  MaxTracker identity, pythagoras;
  for (int s = 0; s < samples; ++s) {
    const FockVector phi = (1.0 + 3.0 * rng.uniform()) *
                           random_state(basis, rng, 0, basis->n_max());
    const double flat = phi.coefficients().norm();
    pythagoras.update(relative(std::abs(flat - phi.norm()), flat), "sample=" + std::to_string(s));
    for (double alpha : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0}) {
      const double direct = alpha_norm(phi, alpha);
      const double spectral = apply_number_power(phi, alpha, 1.0).norm();
      identity.update(relative(std::abs(direct - spectral), direct),
                      "sample=" + std::to_string(s) + " alpha=" + std::to_string(alpha));
    }
  }
  return {make_check("fock.alpha_norm_identity", identity.value, tol.identity_rel_tol,
                     identity.witness),
          make_check("fock.sector_pythagoras", pythagoras.value, 1e-13, pythagoras.witness)};
}

std::vector<CheckResult> check_half_power_bounds(const BasisPtr& basis, int samples,
                                                 std::uint64_t seed, const ToleranceConfig& tol) {
  Rng rng(seed);
  MaxTracker ann, cre;
  for (int s = 0; s < samples; ++s) {
    const auto f = OneParticleVector::random(basis->modes(), rng);
    const std::string label = "sample=" + std::to_string(s);
    const FockVector phi = random_state(basis, rng, 0, basis->n_max());
    ann.update(apply_annihilate(f, phi).norm() / (f.norm() * alpha_norm(phi, 0.5)) - 1.0, label);
    const FockVector psi = random_state(basis, rng, 0, basis->n_max() - 1);
    cre.update(apply_create(f, psi).norm() / (f.norm() * alpha_norm(psi, 0.5)) - 1.0, label);
  }
  return {make_check("fock.half_power_bound.annihilate", std::max(ann.value, 0.0), tol.bound_slack,
                     ann.witness),
          make_check("fock.half_power_bound.create", std::max(cre.value, 0.0), tol.bound_slack,
                     cre.witness)};
}

std::vector<CheckResult> check_number_commutators(const BasisPtr& basis, int samples,
                                                  std::uint64_t seed) {
  Rng rng(seed);
  MaxTracker ann, cre;
  const auto number = [](const FockVector& v) { return apply_number_power(v, 1.0, 0.0); };
  for (int s = 0; s < samples; ++s) {
    const auto f = OneParticleVector::random(basis->modes(), rng);
    const FockVector phi = random_state(basis, rng, 0, basis->n_max() - 1);
    const double scale = f.norm() * alpha_norm(phi, 1.5);
    const std::string label = "sample=" + std::to_string(s);
    const FockVector af = apply_annihilate(f, phi);
    const FockVector r_a = number(af) - apply_annihilate(f, number(phi)) + af;
    ann.update(relative(r_a.norm(), scale), label);
    const FockVector cf = apply_create(f, phi);
    const FockVector r_c = number(cf) - apply_create(f, number(phi)) - cf;
    cre.update(relative(r_c.norm(), scale), label);
  }
  return {make_check("number.commutator.annihilate", ann.value, kCommutatorTol, ann.witness),
          make_check("number.commutator.create", cre.value, kCommutatorTol, cre.witness)};
}

}  // namespace fockbound
