#include <cmath>
#include <exception>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "fockbound/ladder.hpp"
#include "fockbound/verifier.hpp"

namespace fockbound {
namespace {

using Task = std::pair<std::string, std::function<std::vector<CheckResult>()>>;

CheckResult ratio_check(std::string name, std::optional<double> ratio, double expected) {
  const double residual = ratio ? std::abs(*ratio - expected) : std::nan("");
  return make_check(std::move(name), residual, kEqualityTol,
                    ratio ? "ratio=" + std::to_string(*ratio) : "vacuous");
}

std::vector<CheckResult> sharpness_checks(const SuiteOptions& o) {
  const int d = o.d;
  const BasisPtr basis = build_basis(d, o.n_max, o.ladder_factor);
  const OrthonormalSystem canonical = OrthonormalSystem::canonical(d);
  std::vector<CheckResult> out;

  if (d >= 2) {
    std::vector<int> occ(d, 0);
    occ[0] = occ[1] = 1;
    const auto phi = FockVector::from_occupation(basis, occ);
    const auto spec = QuadraticOperatorSpec::dgamma(OneParticleOperator::swap(d), canonical, d);
    out.push_back(ratio_check("bound.dgamma.swap_equality", bound_ratio(spec, phi), 1.0));
  }
  {
    std::vector<Complex> diag(d, 0.0);
    diag[0] = 1.0;
    const auto spec =
        QuadraticOperatorSpec::delta_plus(OneParticleOperator::diagonal(diag), canonical, d);
    out.push_back(ratio_check("bound.deltaplus.vacuum_equality",
                              bound_ratio(spec, FockVector::vacuum(basis)), 1.0));

    std::vector<int> occ(d, 0);
    occ[0] = 2;
    const auto spec_a =
        QuadraticOperatorSpec::delta(OneParticleOperator::diagonal(diag), canonical, d);
    out.push_back(ratio_check("bound.delta.rank_one_half",
                              bound_ratio(spec_a, FockVector::from_occupation(basis, occ)), 0.5));
  }
  {
    Rng rng(derive_seed(o.seed, "bound.number.sector_ratio"));
    const auto spec = QuadraticOperatorSpec::number(canonical, d);
    double worst = 0.0;
    for (int n = 0; n <= o.n_max; ++n) {
      const auto ratio = bound_ratio(spec, random_sector_state(basis, rng, n));
      worst = std::max(worst, ratio ? std::abs(*ratio - n / (n + 1.0)) : std::nan(""));
    }
    out.push_back(make_check("bound.number.sector_ratio", worst, kEqualityTol));
  }
  return out;
}

std::vector<CheckResult> psd_checks(const SuiteOptions& o) {
  const int d = o.d;
  const BasisPtr basis = build_basis(d, o.n_max, o.ladder_factor);
  Rng rng(derive_seed(o.seed, "psd"));
  std::vector<CheckResult> out;
  double hermitian = 0.0;
  constexpr int kDraws = 3;
  for (auto form : {PsdForm::CauchySchwarzPlus, PsdForm::CauchySchwarzMinus,
                    PsdForm::Diagonalization, PsdForm::BasicEstimate, PsdForm::TechnicalFirst,
                    PsdForm::TechnicalSecond}) {
    for (int sector = 0; sector <= o.n_max - 2; ++sector) {
      CheckResult worst;
      for (int draw = 0; draw < kDraws; ++draw) {
        const int m = rng.uniform_int(1, std::min(d, 4));
        PsdParams params = PsdParams::random(d, m, rng);
        params.b_creates = draw % 2 == 1;
        const PsdFormReport r = psd_form_check(form, params, basis, sector, o.tol);
        hermitian = std::max(hermitian, r.hermitian_residual);
        if (draw == 0 || !(r.check.residual <= worst.residual)) worst = r.check;
      }
      out.push_back(worst);
    }
  }

  // equality cases: identity in the basic estimate, complete sum in the second technical estimate
  double basic_eq = 0.0;
  double technical_eq = 0.0;
  for (int sector = 0; sector <= o.n_max - 2; ++sector) {
    PsdParams params = PsdParams::random(d, d, rng);
    params.a = OneParticleOperator::identity(d);
    const PsdFormReport basic = psd_form_check(PsdForm::BasicEstimate, params, basis, sector, o.tol);
    const PsdFormReport technical =
        psd_form_check(PsdForm::TechnicalSecond, params, basis, sector, o.tol);
    basic_eq = std::max(basic_eq, basic.difference_norm);
    technical_eq = std::max(technical_eq, technical.difference_norm);
    hermitian = std::max({hermitian, basic.hermitian_residual, technical.hermitian_residual});
  }
  out.push_back(make_check("psd.basic_estimate.identity_equality", basic_eq, kEqualityTol));
  out.push_back(make_check("psd.technical_second.complete_equality", technical_eq, kEqualityTol));
  out.push_back(make_check("psd.hermitian", hermitian, kHermitianTol));
  return out;
}

std::vector<CheckResult> convergence_checks(const SuiteOptions& o, QuadraticKind kind) {
  const int d = o.convergence_d;
  const BasisPtr basis = build_basis(d, 2, o.ladder_factor);
  const std::string family(to_string(kind));
  Rng rng(derive_seed(o.seed, "converge." + family));
  std::vector<double> diag(d, 1.0);
  std::vector<Complex> cdiag(d, 1.0);
  if (kind != QuadraticKind::Number) {
    for (int j = 0; j < d; ++j) cdiag[j] = diag[j] = 1.0 / (j + 1);
  }
  const auto spec = QuadraticOperatorSpec::complete(kind, OneParticleOperator::diagonal(cdiag),
                                                    OrthonormalSystem::canonical(d));
  const FockVector phi = kind == QuadraticKind::DeltaPlus ? FockVector::vacuum(basis)
                                                          : random_sector_state(basis, rng, 2);
  std::vector<int> grid(d + 1);
  std::iota(grid.begin(), grid.end(), 0);
  const ConvergenceCurve curve = convergence_curve(spec, phi, grid, o.seed);

  double tail = 0.0;
  double rise = 0.0;
  double pair = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    tail = std::max(tail, std::abs(curve.errors[i] - diagonal_tail_error(kind, diag, phi, grid[i])));
    if (i > 0) rise = std::max(rise, curve.errors[i] - curve.errors[i - 1]);
    if (kind == QuadraticKind::DeltaPlus) {
      const double formula = vacuum_pair_norm_formula(spec.coeff, spec.ons, grid[i] + 1, d);
      pair = std::max(pair, std::abs(curve.errors[i] * curve.errors[i] - formula));
    }
  }
  std::vector<CheckResult> out{
      make_check("converge." + family + ".complete", curve.errors.back(), kCompleteSumTol),
      make_check("converge." + family + ".tail", tail, kTailTol)};
  // Delta tails are not monotone in general
  if (kind != QuadraticKind::Delta) {
    out.push_back(make_check("converge." + family + ".monotone", rise, kCompleteSumTol));
  }
  if (kind == QuadraticKind::DeltaPlus) {
    out.push_back(make_check("converge.deltaplus.pair_formula", pair, kTailTol));
  }
  return out;
}

std::vector<CheckResult> divergence_checks(const SuiteOptions& o, WitnessFamily family) {
  const std::string name = "diverge." + std::string(to_string(family));
  const auto entry = family == WitnessFamily::B ? std::function<double(int)>([](int j) { return double(j); })
                                                : std::function<double(int)>([](int) { return 1.0; });
  const ConvergenceCurve curve = divergence_witness(family, entry, o.witness_grid, o.ladder_factor);
  double closed = 0.0;
  double exact = 0.0;
  for (std::size_t i = 0; i < curve.m_values.size(); ++i) {
    const double m = curve.m_values[i];
    closed = std::max(closed, std::abs(curve.errors[i] - curve.reference[i]));
    switch (family) {
      case WitnessFamily::B: exact = std::max(exact, std::abs(curve.errors[i] - m)); break;
      case WitnessFamily::A: {
        const OneParticleOperator id = OneParticleOperator::identity(curve.d);
        const double omega =
            omega_formula(id, OrthonormalSystem::canonical(curve.d), curve.m_values[i]);
        exact = std::max({exact, std::abs(omega - 2.0 * m),
                          std::abs(curve.errors[i] * curve.errors[i] - 2.0 * m)});
        break;
      }
      case WitnessFamily::C: exact = std::max(exact, std::abs(curve.errors[i] - 2.0 * m)); break;
    }
  }
  return {make_check(name + ".closed_form", closed, kWitnessTol),
          make_check(name + ".exact_growth", exact, kWitnessTol),
          make_check(name + ".unbounded", witness_diverges(curve) ? 0.0 : 1.0, 0.0)};
}

}  // namespace

std::vector<CheckResult> run_full_suite(const SuiteOptions& o) {
  if (o.d < 1) throw std::invalid_argument("run_full_suite: d must be >= 1");
  if (o.n_max < 2) throw std::invalid_argument("run_full_suite: n_max must be >= 2");
  o.tol.validate();

  const BasisPtr basis = build_basis(o.d, o.n_max, o.ladder_factor);
  const auto seed = [&o](const char* name) { return derive_seed(o.seed, name); };
  const auto& tol = o.tol;

  std::vector<Task> tasks;
  tasks.emplace_back("ccr", [&] { return check_ccr(basis, o.ccr_samples, seed("ccr"), tol); });
  tasks.emplace_back("fock.vacuum", [&] {
    return std::vector{check_vacuum(basis, 20, seed("fock.vacuum"))};
  });
  tasks.emplace_back("fock.unitarity", [&] {
    return std::vector{check_unitarity(basis, 50, seed("fock.unitarity"), tol)};
  });
  tasks.emplace_back("ladder.sector_norm", [&] {
    auto r = check_sector_ladder_norms(basis, 3, 20, seed("ladder.sector_norm"));
    r.push_back(check_create_norm_attained(basis, 5, seed("ladder.attained")));
    return r;
  });
  tasks.emplace_back("fock.scalar_product", [&] {
    return std::vector{check_scalar_product(basis, 5, 50, seed("fock.scalar_product"), tol)};
  });
  tasks.emplace_back("fock.alpha", [&] { return check_alpha_norms(basis, 50, seed("fock.alpha"), tol); });
  tasks.emplace_back("fock.half_power", [&] {
    return check_half_power_bounds(basis, 100, seed("fock.half_power"), tol);
  });
  tasks.emplace_back("number.commutator", [&] {
    return check_number_commutators(basis, 50, seed("number.commutator"));
  });
  tasks.emplace_back("cross_path", [&] { return check_cross_paths(basis, 30, seed("cross_path"), tol); });
  tasks.emplace_back("adjoint", [&] {
    return check_adjoint_relations(basis, o.operator_samples, seed("adjoint"));
  });
  tasks.emplace_back("ons_independence", [&] {
    return check_ons_independence(basis, o.operator_samples, seed("ons_independence"));
  });
  tasks.emplace_back("pair", [&] { return check_pair_formulas(basis, 30, seed("pair"), tol); });

  const auto coeff = [&](const char* name) {
    Rng rng(seed(name));
    return OneParticleOperator::random(o.d, rng);
  };
  tasks.emplace_back("bound.number", [&] {
    return std::vector{to_check(
        check_bound_number(o.d, o.n_max, o.bound_samples, seed("bound.number"), o.ladder_factor),
        tol)};
  });
  tasks.emplace_back("bound.dgamma", [&] {
    return std::vector{to_check(check_bound_dgamma(coeff("bound.dgamma.coeff"), o.n_max,
                                                   o.bound_samples, seed("bound.dgamma"),
                                                   o.ladder_factor),
                                tol)};
  });
  tasks.emplace_back("bound.delta", [&] {
    return std::vector{to_check(check_bound_delta(coeff("bound.delta.coeff"), o.n_max,
                                                  o.bound_samples, seed("bound.delta"),
                                                  o.ladder_factor),
                                tol)};
  });
  tasks.emplace_back("bound.deltaplus", [&] {
    return std::vector{to_check(check_bound_deltaplus(coeff("bound.deltaplus.coeff"), o.n_max,
                                                      o.bound_samples, seed("bound.deltaplus"),
                                                      o.ladder_factor),
                                tol)};
  });
  tasks.emplace_back("bound.sharpness", [&] { return sharpness_checks(o); });
  tasks.emplace_back("psd", [&] { return psd_checks(o); });
  for (auto kind : {QuadraticKind::Number, QuadraticKind::DGamma, QuadraticKind::Delta,
                    QuadraticKind::DeltaPlus}) {
    tasks.emplace_back("converge." + std::string(to_string(kind)),
                       [&o, kind] { return convergence_checks(o, kind); });
  }
  for (auto family : {WitnessFamily::B, WitnessFamily::A, WitnessFamily::C}) {
    tasks.emplace_back("diverge." + std::string(to_string(family)),
                       [&o, family] { return divergence_checks(o, family); });
  }

  std::vector<std::vector<CheckResult>> results(tasks.size());
  const auto count = static_cast<Index>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (Index i = 0; i < count; ++i) {
    try {
      results[i] = tasks[i].second();
    } catch (const std::exception& e) {
      results[i] = {make_check(tasks[i].first + ".error", std::nan(""), 0.0, e.what())};
    } catch (...) {
      results[i] = {make_check(tasks[i].first + ".error", std::nan(""), 0.0, "unknown exception")};
    }
  }

  std::vector<CheckResult> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace fockbound
