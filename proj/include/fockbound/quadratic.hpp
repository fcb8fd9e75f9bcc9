#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "fockbound/fock_vector.hpp"
#include "fockbound/oneparticle.hpp"

namespace fockbound {

/// Partial sums over an orthonormal system {e_j}, j < M:
///   Number     N_M        = sum a^dagger(e_j)   a(conj e_j)
///   DGamma     dGamma_M(B) = sum a^dagger(B e_j) a(conj e_j)
///   Delta      Delta_M(A)  = sum a(A e_j)        a(conj e_j)
///   DeltaPlus  Delta+_M(C) = sum a^dagger(C e_j) a^dagger(conj e_j)
/// With M = d and a complete system the sums are the completed operators.
enum class QuadraticKind { Number, DGamma, Delta, DeltaPlus };

std::string_view to_string(QuadraticKind kind);
std::optional<QuadraticKind> parse_quadratic_kind(std::string_view name);

/// Change of particle number under the operator: 0, 0, -2, +2.
int sector_shift(QuadraticKind kind);

struct QuadraticOperatorSpec {
  QuadraticKind kind;
  OneParticleOperator coeff;
  OrthonormalSystem ons;
  int M;

  static QuadraticOperatorSpec number(OrthonormalSystem ons, int M);
  static QuadraticOperatorSpec dgamma(OneParticleOperator b, OrthonormalSystem ons, int M);
  static QuadraticOperatorSpec delta(OneParticleOperator a, OrthonormalSystem ons, int M);
  static QuadraticOperatorSpec delta_plus(OneParticleOperator c, OrthonormalSystem ons, int M);
  /// M = number of vectors in ons.
  static QuadraticOperatorSpec complete(QuadraticKind kind, OneParticleOperator coeff,
                                        OrthonormalSystem ons);

  QuadraticOperatorSpec with_M(int m) const;
  void validate() const;
};

/// Summands are applied annihilator first, so Number and DGamma act on the
/// whole truncated space; DeltaPlus needs top_sector <= n_max - 2 and throws
/// TruncationOverflow otherwise.
FockVector apply_partial(const QuadraticOperatorSpec& spec, const FockVector& phi);

using LinearMap = std::function<FockVector(const FockVector&)>;

/// Matrix of `map` from sector n_from to sector n_to, columns in basis order.
/// Columns are assembled in parallel; `map` must be thread-safe.
CMatrix assemble_map_matrix(const BasisPtr& basis, int n_from, int n_to, const LinearMap& map);

/// apply_partial restricted to sector n_from, onto n_from + sector_shift(kind).
/// An image sector below zero gives a matrix with no rows.
CMatrix assemble_sector_matrix(const QuadraticOperatorSpec& spec, const BasisPtr& basis,
                               int n_from);

namespace serial {

FockVector apply_partial(const QuadraticOperatorSpec& spec, const FockVector& phi);
CMatrix assemble_sector_matrix(const QuadraticOperatorSpec& spec, const BasisPtr& basis,
                               int n_from);

}  // namespace serial

// Closed forms on cyclic vectors, evaluated without the partial sums.

/// sum_k a^dagger(f_n)..a^dagger(B f_k)..a^dagger(f_1) Omega; zero for empty fs.
FockVector dgamma_cyclic_oracle(const OneParticleOperator& b, std::span<const OneParticleVector> fs,
                                const BasisPtr& basis);

/// sum_{k != l} (conj g_l, A g_k) times the cyclic vector with g_k, g_l removed.
FockVector delta_cyclic_oracle(const OneParticleOperator& a, std::span<const OneParticleVector> gs,
                               const BasisPtr& basis);

/// ||sum_{j=m1}^{m2} a^dagger(C e_j) a^dagger(conj e_j) Omega||^2 from one-particle
/// data (1-based, inclusive). m1 = m2 + 1 is the empty sum.
double vacuum_pair_norm_formula(const OneParticleOperator& c, const OrthonormalSystem& ons,
                                int m1, int m2);

/// omega_M = sum_{j,k<=M} |(A e_j, conj e_k)|^2 + sum_{k<=M} ||A e_k||^2.
/// Requires transpose(A) == A to 1e-12.
double omega_formula(const OneParticleOperator& a, const OrthonormalSystem& ons, int M);

}  // namespace fockbound
