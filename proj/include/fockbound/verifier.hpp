#pragma once

// Numerical checks of the CCR structure, the number-operator estimates for the
// quadratic operators, their quadratic-form inequalities, strong convergence
// of the partial sums and the growth of the divergence witnesses.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fockbound/fock_basis.hpp"
#include "fockbound/fock_vector.hpp"
#include "fockbound/oneparticle.hpp"
#include "fockbound/quadratic.hpp"

namespace fockbound {

struct ToleranceConfig {
  double identity_rel_tol = 1e-11;
  double psd_eig_tol = 1e-9;
  double bound_slack = 1e-10;

  /// Throws std::invalid_argument on negative or non-finite entries.
  void validate() const;
};

// Fixed thresholds for checks that do not scale with ToleranceConfig.
inline constexpr double kSectorNormTol = 1e-10;
inline constexpr double kMatrixRelTol = 1e-10;
inline constexpr double kCommutatorTol = 1e-10;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kEqualityTol = 1e-10;
inline constexpr double kCompleteSumTol = 1e-12;
inline constexpr double kTailTol = 1e-10;
inline constexpr double kWitnessTol = 1e-10;
/// Bound ratios are not formed when the right side is below this.
inline constexpr double kVacuousBound = 1e-13;

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string witness;
};

/// passed = residual <= tolerance; NaN residuals fail.
CheckResult make_check(std::string name, double residual, double tolerance,
                       std::string witness = {});

struct ConvergenceCurve {
  std::string family;
  std::vector<int> m_values;
  /// ||partial(M) phi - complete phi||, or the witness value for divergence curves.
  std::vector<double> errors;
  /// Independent closed-form values at the same M, when one exists.
  std::vector<double> reference;
  int d = 0;
  int n_max = 0;
  std::uint64_t seed = 0;
};

struct BoundReport {
  std::string family;
  int samples = 0;
  /// Samples whose right side exceeded kVacuousBound.
  int evaluated = 0;
  double max_ratio = 0.0;
  std::string witness;
};

CheckResult to_check(const BoundReport& report, const ToleranceConfig& tol);

// ---- fock-core checks ------------------------------------------------------

std::vector<CheckResult> check_ccr(const BasisPtr& basis, int samples, std::uint64_t seed,
                                   const ToleranceConfig& tol);
CheckResult check_vacuum(const BasisPtr& basis, int samples, std::uint64_t seed);
CheckResult check_unitarity(const BasisPtr& basis, int samples, std::uint64_t seed,
                            const ToleranceConfig& tol);
/// Largest singular value of a(f) on sector n and a^dagger(f) on sector n,
/// for n = 1..max_n, against sqrt(n)||f|| and sqrt(n+1)||f||.
std::vector<CheckResult> check_sector_ladder_norms(const BasisPtr& basis, int max_n, int samples,
                                                   std::uint64_t seed);
/// ||a^dagger(f) phi|| = sqrt(n+1)||f|| at phi = a^dagger(f)^n Omega / norm.
CheckResult check_create_norm_attained(const BasisPtr& basis, int samples, std::uint64_t seed);
/// Fock product of cyclic vectors against the permanent of the Gram matrix.
CheckResult check_scalar_product(const BasisPtr& basis, int max_n, int samples, std::uint64_t seed,
                                 const ToleranceConfig& tol);
std::vector<CheckResult> check_alpha_norms(const BasisPtr& basis, int samples, std::uint64_t seed,
                                           const ToleranceConfig& tol);
std::vector<CheckResult> check_half_power_bounds(const BasisPtr& basis, int samples,
                                                 std::uint64_t seed, const ToleranceConfig& tol);
/// [N, a(f)] = -a(f) and [N, a^dagger(f)] = a^dagger(f).
std::vector<CheckResult> check_number_commutators(const BasisPtr& basis, int samples,
                                                  std::uint64_t seed);

// ---- quadratic-ops checks --------------------------------------------------

/// apply_partial (complete) against the cyclic-vector closed forms.
std::vector<CheckResult> check_cross_paths(const BasisPtr& basis, int samples, std::uint64_t seed,
                                           const ToleranceConfig& tol);
/// dGamma(B)^* = dGamma(B^*), Delta+(C) = Delta(C^*)^*, Delta(A^T) = Delta(A),
/// Delta+(C^T) = Delta+(C) as sector matrices.
std::vector<CheckResult> check_adjoint_relations(const BasisPtr& basis, int samples,
                                                 std::uint64_t seed);
/// Completed operators built from two independent complete systems.
std::vector<CheckResult> check_ons_independence(const BasisPtr& basis, int samples,
                                                std::uint64_t seed);
/// omega_M and the vacuum pair formula against Fock-space evaluation.
std::vector<CheckResult> check_pair_formulas(const BasisPtr& basis, int samples,
                                             std::uint64_t seed, const ToleranceConfig& tol);

// ---- bounds ----------------------------------------------------------------

/// LHS/RHS of the family's number-operator bound for one state:
///   Number     ||N_M phi|| / ||phi||_1
///   DGamma     ||dGamma_M(B) phi|| / (||B|| ||N phi||)
///   Delta      ||Delta_M(A) phi||^2 / (||A||^2 ||N phi||^2 + (||A||_2^2 - ||A||^2) ||N^{1/2} phi||^2)
///   DeltaPlus  ||Delta+_M(C) phi||^2 / (||C||^2 ||(N(N+2))^{1/2} phi||^2 + ||C||_2^2 ||(N+2)^{1/2} phi||^2)
/// Empty when the right side is below kVacuousBound.
std::optional<double> bound_ratio(const QuadraticOperatorSpec& spec, const FockVector& phi);

BoundReport check_bound_number(int d, int n_max, int samples, std::uint64_t seed,
                               const FockBasis::LadderFactor& factor = {});
BoundReport check_bound_dgamma(const OneParticleOperator& b, int n_max, int samples,
                               std::uint64_t seed, const FockBasis::LadderFactor& factor = {});
BoundReport check_bound_delta(const OneParticleOperator& a, int n_max, int samples,
                              std::uint64_t seed, const FockBasis::LadderFactor& factor = {});
/// States are drawn with top_sector <= n_max - 2.
BoundReport check_bound_deltaplus(const OneParticleOperator& c, int n_max, int samples,
                                  std::uint64_t seed, const FockBasis::LadderFactor& factor = {});

// ---- quadratic-form inequalities -------------------------------------------

enum class PsdForm {
  /// sum a_j^* b_k^* b_j a_k <= sum a_j^* b_k^* b_k a_j
  CauchySchwarzPlus,
  /// -sum a_j^* b_k^* b_j a_k <= sum a_j^* b_k^* b_k a_j
  CauchySchwarzMinus,
  /// 0 <= sum a^dagger(BAe_j) a(conj(BAe_j)) <= ||A||^2 sum a^dagger(Be'_j) a(conj(Be'_j))
  Diagonalization,
  /// sum a^dagger(Ae_j) a(conj(Ae_j)) <= ||A||^2 N
  BasicEstimate,
  /// sum a^dagger(Ae_j) (N+1) a(conj(Ae_j)) <= ||A||^2 N^2
  TechnicalFirst,
  /// sum a^dagger(e_j) N a(conj e_j) <= N(N-1)
  TechnicalSecond,
};

std::string_view to_string(PsdForm form);

struct PsdParams {
  OneParticleOperator a;
  OneParticleOperator b;
  OrthonormalSystem ons;
  int M;
  /// Cauchy-Schwarz operators: a_j = a(a_vectors[j]); b_j = a(b_vectors[j]),
  /// or a^dagger(b_vectors[j]) when b_creates.
  std::vector<OneParticleVector> a_vectors;
  std::vector<OneParticleVector> b_vectors;
  bool b_creates = false;

  static PsdParams random(int d, int M, Rng& rng);
};

struct PsdFormReport {
  CheckResult check;
  double min_eigenvalue = 0.0;
  double scale = 0.0;
  /// ||X - X^*|| / max(||X||, scale) for X = RHS - LHS.
  double hermitian_residual = 0.0;
  /// ||X|| / scale; zero for the equality cases.
  double difference_norm = 0.0;
};

/// Hermitizes RHS - LHS on one sector and checks its lowest eigenvalue
/// against -psd_eig_tol * scale, scale = max(||LHS||, ||RHS||).
PsdFormReport psd_form_check(PsdForm form, const PsdParams& params, const BasisPtr& basis,
                             int sector, const ToleranceConfig& tol);

// ---- convergence and divergence --------------------------------------------

/// errors[i] = ||apply_partial(M_i) phi - apply_partial(full) phi||.
ConvergenceCurve convergence_curve(const QuadraticOperatorSpec& complete_spec,
                                   const FockVector& phi, std::span<const int> m_grid,
                                   std::uint64_t seed = 0);

/// Tail ||sum_{j>M} (summand_j) phi|| for a coefficient diagonal in the
/// canonical basis, computed from occupation numbers alone.
double diagonal_tail_error(QuadraticKind kind, std::span<const double> diagonal,
                           const FockVector& phi, int M);

enum class WitnessFamily { B, A, C };
std::string_view to_string(WitnessFamily family);
std::optional<WitnessFamily> parse_witness_family(std::string_view name);

/// Coefficient diag(entry(1), ..., entry(d)) on d = max(grid) modes, canonical
/// system, evaluated at M in grid:
///   B: ||dGamma_M(B)|_{sector 1}||,          reference ||B P_M||
///   A: ||Delta_M(A) Phi_M||, Phi_M = Delta_M(A)^* Omega / norm,  reference sqrt(omega_M)
///   C: ||Delta+_M(C) Omega||^2,              reference vacuum pair formula
ConvergenceCurve divergence_witness(WitnessFamily family, const std::function<double(int)>& entry,
                                    std::span<const int> grid,
                                    const FockBasis::LadderFactor& factor = {});

/// Strictly increasing with last/first >= 2.
bool witness_diverges(const ConvergenceCurve& curve);

// ---- suite -----------------------------------------------------------------

struct SuiteOptions {
  int d = 6;
  int n_max = 4;
  std::uint64_t seed = 1;
  ToleranceConfig tol;
  int ccr_samples = 200;
  int bound_samples = 100;
  int operator_samples = 20;
  int convergence_d = 40;
  std::vector<int> witness_grid = {2, 4, 8, 16};
  /// Replaces sqrt(k) in every basis the suite builds; for mutation tests.
  FockBasis::LadderFactor ladder_factor;
};

/// Deterministic given the options; each check draws from its own stream
/// derive_seed(seed, check name). Requires d >= 1, n_max >= 2.
std::vector<CheckResult> run_full_suite(const SuiteOptions& options);

}  // namespace fockbound
