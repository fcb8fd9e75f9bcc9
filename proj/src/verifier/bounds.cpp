#include <cmath>
#include <string>

#include "common.hpp"
#include "fockbound/ladder.hpp"
#include "fockbound/verifier.hpp"

namespace fockbound {
namespace {

BoundReport sample_bound(const std::string& family, QuadraticKind kind,
                         const OneParticleOperator& coeff, int n_max, int samples,
                         std::uint64_t seed, const FockBasis::LadderFactor& factor) {
  const int d = coeff.dim();
  const BasisPtr basis = build_basis(d, n_max, factor);
  Rng rng(seed);
  const auto base = QuadraticOperatorSpec::complete(
      kind, coeff, random_orthonormal_system(d, d, rng.next_u64()));
  const int top = kind == QuadraticKind::DeltaPlus ? n_max - 2 : n_max;
  if (top < 0) throw std::invalid_argument(family + " bound: n_max too small for the safe domain");

  BoundReport report;
  report.family = family;
  report.samples = samples;
  detail::MaxTracker worst;
  for (int s = 0; s < samples; ++s) {
    // every fourth sample uses the complete sum
    const int m = (s % 4 == 3) ? d : rng.uniform_int(1, d);
    const FockVector phi = random_state(basis, rng, 0, top);
    const auto ratio = bound_ratio(base.with_M(m), phi);
    if (!ratio) continue;
    ++report.evaluated;
    worst.update(*ratio, "sample=" + std::to_string(s) + " M=" + std::to_string(m));
  }
  report.max_ratio = worst.value;
  report.witness = worst.witness;
  return report;
}

}  // namespace

CheckResult to_check(const BoundReport& report, const ToleranceConfig& tol) {
  return make_check("bound." + report.family, std::max(report.max_ratio - 1.0, 0.0),
                    tol.bound_slack,
                    report.witness + " max_ratio=" + std::to_string(report.max_ratio) +
                        " evaluated=" + std::to_string(report.evaluated));
}

std::optional<double> bound_ratio(const QuadraticOperatorSpec& spec, const FockVector& phi) {
  const FockVector image = apply_partial(spec, phi);
  const FockVector n_phi = apply_number_power(phi, 1.0, 0.0);
  double lhs = 0.0;
  double rhs = 0.0;
  switch (spec.kind) {
    case QuadraticKind::Number:
      lhs = image.norm();
      rhs = alpha_norm(phi, 1.0);
      break;
    case QuadraticKind::DGamma:
      lhs = image.norm();
      rhs = operator_norm(spec.coeff) * n_phi.norm();
      break;
    case QuadraticKind::Delta: {
      const double op = operator_norm(spec.coeff);
      const double hs = hs_norm(spec.coeff);
      lhs = image.squared_norm();
      rhs = op * op * n_phi.squared_norm() +
            (hs * hs - op * op) * apply_number_power(phi, 0.5, 0.0).squared_norm();
      break;
    }
    case QuadraticKind::DeltaPlus: {
      const double op = operator_norm(spec.coeff);
      const double hs = hs_norm(spec.coeff);
      const FockVector shifted = apply_number_power(phi, 0.5, 2.0);  // (N+2)^{1/2} phi
      lhs = image.squared_norm();
      rhs = op * op * apply_number_power(shifted, 0.5, 0.0).squared_norm() +
            hs * hs * shifted.squared_norm();
      break;
    }
  }
  if (!(rhs >= kVacuousBound)) return std::nullopt;
  return lhs / rhs;
}

BoundReport check_bound_number(int d, int n_max, int samples, std::uint64_t seed,
                               const FockBasis::LadderFactor& factor) {
  return sample_bound("number", QuadraticKind::Number, OneParticleOperator::identity(d), n_max,
                      samples, seed, factor);
}

BoundReport check_bound_dgamma(const OneParticleOperator& b, int n_max, int samples,
                               std::uint64_t seed, const FockBasis::LadderFactor& factor) {
  return sample_bound("dgamma", QuadraticKind::DGamma, b, n_max, samples, seed, factor);
}

BoundReport check_bound_delta(const OneParticleOperator& a, int n_max, int samples,
                              std::uint64_t seed, const FockBasis::LadderFactor& factor) {
  return sample_bound("delta", QuadraticKind::Delta, a, n_max, samples, seed, factor);
}

BoundReport check_bound_deltaplus(const OneParticleOperator& c, int n_max, int samples,
                                  std::uint64_t seed, const FockBasis::LadderFactor& factor) {
  return sample_bound("deltaplus", QuadraticKind::DeltaPlus, c, n_max, samples, seed, factor);
}

}  // namespace fockbound
