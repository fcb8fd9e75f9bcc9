#include <cmath>
#include <vector>

#include "catch_amalgamated.hpp"

#include "fockbound/errors.hpp"
#include "fockbound/ladder.hpp"
#include "fockbound/quadratic.hpp"
#include "fockbound/rng.hpp"

using namespace fockbound;
using Catch::Matchers::WithinAbs;

namespace {

FockVector ket(const BasisPtr& b, std::vector<int> occ) { return FockVector::from_occupation(b, occ); }

double dist(const FockVector& a, const FockVector& b) { return (a - b).norm(); }

// sum_pq B_pq a_p^dagger a_q straight from the ladder kernels
FockVector dgamma_matrix_elements(const OneParticleOperator& b, const FockVector& phi) {
  const int d = b.dim();
  FockVector out(phi.basis_ptr());
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      if (b(p, q) == Complex(0.0)) continue;
      out = out + b(p, q) * apply_create(OneParticleVector::unit(d, p),
                                          apply_annihilate(OneParticleVector::unit(d, q), phi));
    }
  return out;
}

}  // namespace

TEST_CASE("partial sums on basis states", "[quadratic]") {
  const auto b = build_basis(2, 4);
  const auto ons = OrthonormalSystem::canonical(2);
  const double r2 = std::sqrt(2.0);

  const auto n = apply_partial(QuadraticOperatorSpec::number(ons, 2), ket(b, {1, 1}));
  CHECK(dist(n, 2.0 * ket(b, {1, 1})) < 1e-15);

  const auto g = apply_partial(QuadraticOperatorSpec::dgamma(OneParticleOperator::swap(2), ons, 2),
                               ket(b, {1, 1}));
  CHECK(dist(g, r2 * ket(b, {2, 0}) + r2 * ket(b, {0, 2})) < 1e-15);
  CHECK_THAT(g.norm(), WithinAbs(2.0, 1e-15));

  const auto dl = apply_partial(QuadraticOperatorSpec::delta(OneParticleOperator::identity(2), ons, 2),
                                ket(b, {2, 0}));
  CHECK(dist(dl, r2 * FockVector::vacuum(b)) < 1e-15);

  const auto dp = apply_partial(
      QuadraticOperatorSpec::delta_plus(OneParticleOperator::diagonal({1.0, 0.0}), ons, 2),
      FockVector::vacuum(b));
  CHECK(dist(dp, r2 * ket(b, {2, 0})) < 1e-15);

  CHECK_THROWS_AS(apply_partial(QuadraticOperatorSpec::delta_plus(OneParticleOperator::identity(2), ons, 2),
                                ket(b, {0, 3})),
                  TruncationOverflow);
}

TEST_CASE("complete dGamma equals the matrix-element sum", "[quadratic][property]") {
  const auto b = build_basis(4, 3);
  Rng rng(19);
  for (int t = 0; t < 10; ++t) {
    const auto coeff = OneParticleOperator::random(4, rng);
    const auto ons = random_orthonormal_system(4, 4, rng.next_u64());
    const auto phi = random_state(b, rng, 0, 3);
    CHECK(dist(apply_partial(QuadraticOperatorSpec::dgamma(coeff, ons, 4), phi),
               dgamma_matrix_elements(coeff, phi)) < 1e-12);
  }
}

TEST_CASE("sector matrices", "[quadratic]") {
  const int d = 4;
  const auto b = build_basis(d, 4);
  const auto canonical = OrthonormalSystem::canonical(d);
  for (int n = 0; n <= 4; ++n) {
    const CMatrix m = assemble_sector_matrix(QuadraticOperatorSpec::number(canonical, d), b, n);
    CHECK((m - n * CMatrix::Identity(m.rows(), m.cols())).norm() < 1e-13);
  }

  Rng rng(5);
  const auto coeff = OneParticleOperator::random(d, rng);
  for (int m = 0; m <= d; ++m) {
    const CMatrix s1 = assemble_sector_matrix(QuadraticOperatorSpec::dgamma(coeff, canonical, m), b, 1);
    // sector-1 basis is e_1..e_d in order
    CHECK((s1 - CMatrix(coeff.entries() * canonical.projector(m))).norm() < 1e-13);
  }

  for (int n = 0; n <= 1; ++n) {
    const CMatrix z = assemble_sector_matrix(QuadraticOperatorSpec::delta(coeff, canonical, d), b, n);
    CHECK(z.norm() == 0.0);
  }
}

TEST_CASE("parallel assembly matches the serial reference", "[quadratic]") {
  const auto b = build_basis(6, 4);
  Rng rng(23);
  const auto coeff = OneParticleOperator::random(6, rng);
  const auto ons = random_orthonormal_system(6, 6, 99);
  for (auto kind : {QuadraticKind::Number, QuadraticKind::DGamma, QuadraticKind::Delta,
                    QuadraticKind::DeltaPlus}) {
    const auto spec = QuadraticOperatorSpec::complete(kind, coeff, ons).with_M(4);
    for (int n = 0; n <= 2; ++n) {
      const CMatrix par = assemble_sector_matrix(spec, b, n);
      const CMatrix ser = serial::assemble_sector_matrix(spec, b, n);
      REQUIRE(par.rows() == ser.rows());
      CHECK((par - ser).norm() <= 1e-13 * std::max(1.0, ser.norm()));
    }
    const auto phi = random_state(b, rng, 0, 2);
    CHECK(dist(apply_partial(spec, phi), serial::apply_partial(spec, phi)) < 1e-13);
  }
}

TEST_CASE("cyclic-vector closed forms", "[quadratic]") {
  const auto b = build_basis(3, 4);
  Rng rng(41);
  const auto coeff = OneParticleOperator::random(3, rng);
  CHECK(dgamma_cyclic_oracle(coeff, {}, b).norm() == 0.0);

  const std::vector<OneParticleVector> one{OneParticleVector::random(3, rng)};
  CHECK(dist(dgamma_cyclic_oracle(coeff, one, b), apply_create(coeff * one[0], FockVector::vacuum(b))) < 1e-14);

  std::vector<OneParticleVector> fs;
  for (int k = 0; k < 3; ++k) fs.push_back(OneParticleVector::random(3, rng));
  const auto cyc = build_cyclic_vector(fs, b);
  CHECK(dist(dgamma_cyclic_oracle(OneParticleOperator::identity(3), fs, b), 3.0 * cyc) < 1e-12);

  CHECK(delta_cyclic_oracle(coeff, {}, b).norm() == 0.0);
  CHECK(delta_cyclic_oracle(coeff, one, b).norm() == 0.0);

  const auto b2 = build_basis(2, 2);
  const std::vector<OneParticleVector> e1e1(2, OneParticleVector::unit(2, 0));
  const auto two = delta_cyclic_oracle(OneParticleOperator::identity(2), e1e1, b2);
  CHECK(dist(two, 2.0 * FockVector::vacuum(b2)) < 1e-15);
  // a^dagger(e1)^2 Omega = sqrt(2)|2,0>, and Delta(I) maps it to 2 Omega
  const auto direct = apply_partial(QuadraticOperatorSpec::delta(OneParticleOperator::identity(2),
                                                                 OrthonormalSystem::canonical(2), 2),
                                    build_cyclic_vector(e1e1, b2));
  CHECK(dist(direct, two) < 1e-14);

  const auto ons = random_orthonormal_system(3, 3, 7);
  const auto spec = QuadraticOperatorSpec::delta(coeff, ons, 3);
  CHECK(dist(delta_cyclic_oracle(coeff, fs, b), apply_partial(spec, cyc)) <= 1e-11 * std::max(1.0, cyc.norm()));
}

TEST_CASE("vacuum pair formula and omega", "[quadratic]") {
  const auto c2 = OrthonormalSystem::canonical(2);
  CHECK_THAT(vacuum_pair_norm_formula(OneParticleOperator::identity(2), c2, 1, 2), WithinAbs(4.0, 1e-14));
  CHECK_THAT(vacuum_pair_norm_formula(OneParticleOperator::diagonal({1.0, 0.0}), c2, 1, 1),
             WithinAbs(2.0, 1e-14));
  CHECK(vacuum_pair_norm_formula(OneParticleOperator::zero(2), c2, 1, 2) == 0.0);

  const auto c5 = OrthonormalSystem::canonical(5);
  CHECK_THAT(omega_formula(OneParticleOperator::identity(5), c5, 5), WithinAbs(10.0, 1e-13));
  CHECK(omega_formula(OneParticleOperator::zero(5), c5, 5) == 0.0);

  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    const auto a = OneParticleOperator::random_symmetric(5, rng);
    CHECK(omega_formula(a, c5, 5) >= hs_norm(a) * hs_norm(a) - 1e-11);
  }
  CHECK_THROWS(omega_formula(OneParticleOperator::random(5, rng), c5, 5));
}

TEST_CASE("pair formula against Fock evaluation", "[quadratic][property]") {
  const int d = 4;
  const auto b = build_basis(d, 2);
  Rng rng(44);
  for (int t = 0; t < 10; ++t) {
    const auto c = OneParticleOperator::random(d, rng);
    const auto ons = random_orthonormal_system(d, d, rng.next_u64());
    for (int m = 0; m <= d; ++m) {
      const auto v = apply_partial(QuadraticOperatorSpec::delta_plus(c, ons, m), FockVector::vacuum(b));
      CHECK_THAT(v.squared_norm(), WithinAbs(vacuum_pair_norm_formula(c, ons, 1, m), 1e-11));
    }
  }
}

TEST_CASE("spec validation", "[quadratic]") {
  const auto ons = OrthonormalSystem::canonical(3);
  CHECK_THROWS(QuadraticOperatorSpec::number(ons, 4));
  CHECK_THROWS(QuadraticOperatorSpec::number(ons, -1));
  CHECK_THROWS_AS(QuadraticOperatorSpec::dgamma(OneParticleOperator::identity(2), ons, 2), DimensionMismatch);
  CHECK(parse_quadratic_kind("deltaplus") == QuadraticKind::DeltaPlus);
  CHECK_FALSE(parse_quadratic_kind("foo"));
  const auto b = build_basis(2, 2);
  CHECK_THROWS_AS(apply_partial(QuadraticOperatorSpec::number(ons, 3), FockVector::vacuum(b)), DimensionMismatch);
}
