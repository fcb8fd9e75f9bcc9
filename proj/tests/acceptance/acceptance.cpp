// Acceptance run: one PASS/FAIL line per criterion. Tolerances are pinned here
// rather than read back from the library.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fockbound/ladder.hpp"
#include "fockbound/rng.hpp"
#include "fockbound/verifier.hpp"

using namespace fockbound;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, static_cast<double>(args)...);
  return buf;
}

// every check passed, and none ran with a looser tolerance than pinned
bool all_within(const std::vector<CheckResult>& checks, double pinned, double& worst) {
  bool ok = !checks.empty();
  worst = 0.0;
  for (const auto& c : checks) {
    ok = ok && c.passed && c.tolerance <= pinned && c.residual <= pinned;
    worst = std::max(worst, std::isnan(c.residual) ? INFINITY : c.residual);
  }
  return ok;
}

Outcome ccr_suite() {
  constexpr double kTol = 1e-11;
  constexpr double kSeconds = 10.0;
  const auto start = Clock::now();
  ToleranceConfig tol;
  tol.identity_rel_tol = kTol;
  const auto checks = check_ccr(build_basis(6, 4), 200, derive_seed(kSeed, "ccr"), tol);
  const double elapsed = seconds_since(start);
  double worst = 0.0;
  const bool ok = all_within(checks, kTol, worst) && checks.size() == 3 && elapsed < kSeconds;
  return {ok, fmt("max residual %.2e (tol %.0e), %.2f s", worst, kTol, elapsed)};
}

Outcome permanent_formula() {
  constexpr double kTol = 1e-11;
  ToleranceConfig tol;
  tol.identity_rel_tol = kTol;
  const auto c = check_scalar_product(build_basis(6, 5), 5, 50, derive_seed(kSeed, "permanent"), tol);
  double worst = 0.0;
  return {all_within({c}, kTol, worst), fmt("max relative error %.2e (tol %.0e)", worst, kTol)};
}

Outcome sector_norms() {
  constexpr double kTol = 1e-10;
  const auto checks = check_sector_ladder_norms(build_basis(6, 4), 3, 20, derive_seed(kSeed, "sector"));
  double worst = 0.0;
  const bool ok = all_within(checks, kTol, worst) && checks.size() == 6;
  return {ok, fmt("max |sigma_max - sqrt(n)|f|| | %.2e (tol %.0e)", worst, kTol)};
}

Outcome bound_suites() {
  constexpr double kSlack = 1e-10;
  constexpr double kSharp = 1e-10;
  Rng rng(derive_seed(kSeed, "bound.coeff"));
  const std::vector<BoundReport> reports{
      check_bound_number(6, 4, 100, derive_seed(kSeed, "bound.number")),
      check_bound_dgamma(OneParticleOperator::random(6, rng), 4, 100, derive_seed(kSeed, "bound.dgamma")),
      check_bound_delta(OneParticleOperator::random(6, rng), 4, 100, derive_seed(kSeed, "bound.delta")),
      check_bound_deltaplus(OneParticleOperator::random(6, rng), 4, 100, derive_seed(kSeed, "bound.deltaplus"))};
  bool ok = true;
  double max_ratio = 0.0;
  for (const auto& r : reports) {
    ok = ok && r.samples == 100 && r.evaluated > 0 && r.max_ratio <= 1.0 + kSlack;
    max_ratio = std::max(max_ratio, r.max_ratio);
  }

  const auto b = build_basis(2, 4);
  const auto ons = OrthonormalSystem::canonical(2);
  const auto swap = bound_ratio(QuadraticOperatorSpec::dgamma(OneParticleOperator::swap(2), ons, 2),
                                FockVector::from_occupation(b, std::vector<int>{1, 1}));
  const auto pair = bound_ratio(
      QuadraticOperatorSpec::delta_plus(OneParticleOperator::diagonal({1.0, 0.0}), ons, 2), FockVector::vacuum(b));
  const double sharp = std::max(swap ? std::abs(*swap - 1.0) : INFINITY, pair ? std::abs(*pair - 1.0) : INFINITY);
  ok = ok && sharp <= kSharp;
  return {ok, fmt("max ratio %.6f over 4x100 samples; equality cases off by %.2e (tol %.0e)", max_ratio,
                  sharp, kSharp)};
}

Outcome psd_checks() {
  constexpr double kEig = 1e-9;
  constexpr double kEquality = 1e-10;
  const int d = 5;
  const int n_max = 4;
  const auto basis = build_basis(d, n_max);
  ToleranceConfig tol;
  tol.psd_eig_tol = kEig;
  Rng rng(derive_seed(kSeed, "psd"));
  bool ok = true;
  double worst = 0.0;
  double worst_equality = 0.0;
  int count = 0;
  for (auto form : {PsdForm::CauchySchwarzPlus, PsdForm::CauchySchwarzMinus, PsdForm::Diagonalization,
                    PsdForm::BasicEstimate, PsdForm::TechnicalFirst, PsdForm::TechnicalSecond}) {
    for (int sector = 0; sector <= n_max - 2; ++sector) {
      for (int draw = 0; draw < 3; ++draw) {
        auto params = PsdParams::random(d, rng.uniform_int(1, d), rng);
        params.b_creates = draw == 1;
        const auto r = psd_form_check(form, params, basis, sector, tol);
        // min eigenvalue >= -1e-9 * scale
        ok = ok && r.check.passed && r.min_eigenvalue >= -kEig * r.scale;
        worst = std::max(worst, r.check.residual);
        ++count;
      }
    }
  }
  for (int sector = 0; sector <= n_max - 2; ++sector) {
    auto params = PsdParams::random(d, d, rng);
    params.a = OneParticleOperator::identity(d);
    for (auto form : {PsdForm::BasicEstimate, PsdForm::TechnicalSecond}) {
      const auto r = psd_form_check(form, params, basis, sector, tol);
      worst_equality = std::max(worst_equality, r.difference_norm);
    }
  }
  ok = ok && worst_equality <= kEquality;
  return {ok, fmt("%.0f forms, worst negative part %.2e (tol %.0e); equality norm %.2e (tol %.0e)", count,
                  worst, kEig, worst_equality, kEquality)};
}

Outcome adjoint_symmetry() {
  constexpr double kTol = 1e-10;
  const auto basis = build_basis(6, 4);
  auto checks = check_adjoint_relations(basis, 20, derive_seed(kSeed, "adjoint"));
  const auto ons = check_ons_independence(basis, 20, derive_seed(kSeed, "ons"));
  checks.insert(checks.end(), ons.begin(), ons.end());
  double worst = 0.0;
  const bool ok = all_within(checks, kTol, worst) && checks.size() == 8;
  return {ok, fmt("8 relations x 20 operators, max relative residual %.2e (tol %.0e)", worst, kTol)};
}

Outcome convergence() {
  constexpr double kComplete = 1e-12;
  constexpr double kTail = 1e-10;
  const int d = 40;
  const auto basis = build_basis(d, 2);
  const auto canonical = OrthonormalSystem::canonical(d);
  std::vector<Complex> inverse(d);
  for (int j = 0; j < d; ++j) inverse[j] = 1.0 / (j + 1);
  std::vector<int> grid(d + 1);
  for (int m = 0; m <= d; ++m) grid[m] = m;

  Rng rng(derive_seed(kSeed, "convergence"));
  const auto phi = random_sector_state(basis, rng, 2);
  double final_error = 0.0;
  for (auto kind : {QuadraticKind::Number, QuadraticKind::DGamma, QuadraticKind::Delta, QuadraticKind::DeltaPlus}) {
    const auto spec = QuadraticOperatorSpec::complete(kind, OneParticleOperator::diagonal(inverse), canonical);
    const auto curve =
        convergence_curve(spec, kind == QuadraticKind::DeltaPlus ? FockVector::vacuum(basis) : phi, grid);
    final_error = std::max(final_error, curve.errors.back());
  }

  const auto plus = QuadraticOperatorSpec::delta_plus(OneParticleOperator::diagonal(inverse), canonical, d);
  const auto curve = convergence_curve(plus, FockVector::vacuum(basis), grid);
  double tail = 0.0;
  for (int m = 0; m <= d; ++m) {
    const double formula = vacuum_pair_norm_formula(plus.coeff, canonical, m + 1, d);
    tail = std::max(tail, std::abs(curve.errors[m] * curve.errors[m] - formula));
  }
  const bool ok = final_error <= kComplete && tail <= kTail;
  return {ok, fmt("error at M=d %.2e (tol %.0e); pair tail mismatch %.2e (tol %.0e)", final_error, kComplete,
                  tail, kTail)};
}

Outcome divergence() {
  constexpr double kTol = 1e-10;
  const std::vector<int> grid{2, 4, 8, 16};
  const auto one = [](int) { return 1.0; };
  const auto c = divergence_witness(WitnessFamily::C, one, grid);
  const auto b = divergence_witness(WitnessFamily::B, [](int j) { return double(j); }, grid);
  const auto id = OneParticleOperator::identity(16);
  const auto ons = OrthonormalSystem::canonical(16);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double m = grid[i];
    worst = std::max({worst, std::abs(omega_formula(id, ons, grid[i]) - 2 * m), std::abs(c.errors[i] - 2 * m),
                      std::abs(b.errors[i] - m)});
  }
  return {worst <= kTol, fmt("max deviation from 2M / 2M / M: %.2e (tol %.0e)", worst, kTol)};
}

Outcome end_to_end() {
  constexpr double kSeconds = 60.0;
  const fs::path root = fs::temp_directory_path() / ("fockbound_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  fs::create_directories(root);

  const auto run = [&](const std::string& tag, double& elapsed) {
    const std::string cmd = std::string("\"") + FOCKBOUND_CLI + "\" verify --config \"" +
                            FOCKBOUND_DEFAULT_CONFIG + "\" --out \"" + (root / tag).string() + "\" > \"" +
                            (root / (tag + ".stdout")).string() + "\" 2> \"" + (root / (tag + ".stderr")).string() + "\"";
    const auto start = Clock::now();
    const int status = std::system(cmd.c_str());
    elapsed = seconds_since(start);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };

  double t1 = 0.0;
  double t2 = 0.0;
  const int code1 = run("first", t1);
  const int code2 = run("second", t2);
  const std::string report1 = slurp(root / "first" / "verify_report.json");
  const bool identical = !report1.empty() && report1 == slurp(root / "second" / "verify_report.json") &&
                         slurp(root / "first.stdout") == slurp(root / "second.stdout");
  fs::remove_all(root);

  const bool ok = code1 == 0 && code2 == 0 && identical && t1 < kSeconds && t2 < kSeconds;
  return {ok, fmt("exit codes %.0f/%.0f, %.2f s", code1, code2, std::max(t1, t2)) +
                  (identical ? ", rerun byte-identical" : ", rerun differs")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"CCR suite", ccr_suite},
      {"scalar product permanent", permanent_formula},
      {"sector ladder norms", sector_norms},
      {"number-operator bounds", bound_suites},
      {"quadratic-form inequalities", psd_checks},
      {"adjoint/symmetry/ONS independence", adjoint_symmetry},
      {"partial-sum convergence", convergence},
      {"divergence witnesses", divergence},
      {"end-to-end verify", end_to_end},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, "exception"};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("CRITERION %zu %s  %s: %s\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str());
    failures += !o.passed;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
