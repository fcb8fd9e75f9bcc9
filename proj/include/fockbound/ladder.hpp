#pragma once

#include <span>

#include "fockbound/fock_vector.hpp"
#include "fockbound/oneparticle.hpp"

namespace fockbound {

// a(f) = sum_j f_j a_j and a^dagger(f) = sum_j f_j a^dagger_j, both linear in f,
// so [a(f), a^dagger(g)] = (conj f, g) and a(f)^* = a^dagger(conj f).
//
// The default kernels gather each output coefficient from its neighbours via
// the basis tables and are OpenMP-parallel over output states; the results
// do not depend on the thread count. serial:: holds the scatter-form reference
// that ranks occupations directly and is kept for cross-checking.

/// Throws TruncationOverflow if phi has support on sector n_max.
FockVector apply_create(const OneParticleVector& f, const FockVector& phi);
FockVector apply_annihilate(const OneParticleVector& f, const FockVector& phi);

/// a^dagger(f_n) ... a^dagger(f_1) Omega with fs = {f_1, ..., f_n}.
FockVector build_cyclic_vector(std::span<const OneParticleVector> fs, const BasisPtr& basis);

/// sqrt(sum_n (n+1)^{2 alpha} ||phi^(n)||^2).
double alpha_norm(const FockVector& phi, double alpha);

/// Sector n scaled by (n + shift)^alpha.
FockVector apply_number_power(const FockVector& phi, double alpha, double shift = 0.0);

namespace serial {

FockVector apply_create(const OneParticleVector& f, const FockVector& phi);
FockVector apply_annihilate(const OneParticleVector& f, const FockVector& phi);

}  // namespace serial

/// Minimum output length before the ladder kernels fork threads.
inline constexpr Index kParallelThreshold = 2048;

}  // namespace fockbound
