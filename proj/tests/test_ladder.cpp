#include <cmath>
#include <vector>

#include <omp.h>

#include "catch_amalgamated.hpp"

#include "fockbound/errors.hpp"
#include "fockbound/ladder.hpp"
#include "fockbound/rng.hpp"

using namespace fockbound;
using Catch::Matchers::WithinAbs;

namespace {

FockVector ket(const BasisPtr& b, std::vector<int> occ) { return FockVector::from_occupation(b, occ); }

double dist(const FockVector& a, const FockVector& b) { return (a - b).norm(); }

}  // namespace

TEST_CASE("creation examples", "[ladder]") {
  const auto b = build_basis(2, 3);
  const auto e1 = OneParticleVector::unit(2, 0);
  CHECK(dist(apply_create(e1, FockVector::vacuum(b)), ket(b, {1, 0})) == 0.0);
  CHECK(dist(apply_create(e1, ket(b, {1, 0})), std::sqrt(2.0) * ket(b, {2, 0})) < 1e-15);
  CHECK_THROWS_AS(apply_create(e1, ket(b, {0, 3})), TruncationOverflow);
}

TEST_CASE("annihilation examples", "[ladder]") {
  const auto b = build_basis(2, 3);
  const auto e1 = OneParticleVector::unit(2, 0);
  Rng rng(1);
  const auto f = OneParticleVector::random(2, rng);
  CHECK(apply_annihilate(f, FockVector::vacuum(b)).norm() == 0.0);
  CHECK(dist(apply_annihilate(e1, ket(b, {2, 0})), std::sqrt(2.0) * ket(b, {1, 0})) < 1e-15);
}

TEST_CASE("ladder operators are linear in f", "[ladder][property]") {
  const auto b = build_basis(3, 4);
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto f = OneParticleVector::random(3, rng);
    const auto g = OneParticleVector::random(3, rng);
    const Complex s = rng.complex_normal();
    const auto phi = random_state(b, rng, 0, 3);
    CHECK(dist(apply_annihilate(s * f + g, phi),
               s * apply_annihilate(f, phi) + apply_annihilate(g, phi)) < 1e-12);
    CHECK(dist(apply_create(s * f + g, phi), s * apply_create(f, phi) + apply_create(g, phi)) < 1e-12);
    // a(f)^* = a^dagger(conj f)
    const auto psi = random_state(b, rng, 1, 4);
    CHECK(std::abs(inner_product(psi, apply_create(f.conjugate(), phi)) -
                   inner_product(apply_annihilate(f, psi), phi)) < 1e-12);
  }
}

TEST_CASE("canonical commutation relations", "[ladder][property]") {
  const auto b = build_basis(4, 4);
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    const auto f = OneParticleVector::random(4, rng);
    const auto g = OneParticleVector::random(4, rng);
    const auto phi = random_state(b, rng, 0, 2);
    const auto comm = apply_annihilate(f, apply_create(g, phi)) - apply_create(g, apply_annihilate(f, phi));
    CHECK(dist(comm, conjugate_pairing(f, g) * phi) < 1e-12);
    const auto aa = apply_annihilate(f, apply_annihilate(g, phi)) - apply_annihilate(g, apply_annihilate(f, phi));
    CHECK(aa.norm() < 1e-12);
    const auto cc = apply_create(f, apply_create(g, phi)) - apply_create(g, apply_create(f, phi));
    CHECK(cc.norm() < 1e-12);
  }
}

TEST_CASE("parallel kernels match the serial reference", "[ladder]") {
  // top sector of 10 modes, n_max 6 exceeds the fork threshold
  const auto b = build_basis(10, 6);
  REQUIRE(b->sector_size(6) > kParallelThreshold);
  const int threads = omp_get_max_threads();
  omp_set_num_threads(4);
  Rng rng(4);
  for (int t = 0; t < 5; ++t) {
    const auto f = OneParticleVector::random(10, rng);
    const auto phi = random_state(b, rng, 0, 5);
    CHECK(dist(apply_create(f, phi), serial::apply_create(f, phi)) < 1e-13);
    const auto full = random_state(b, rng, 0, 6);
    CHECK(dist(apply_annihilate(f, full), serial::apply_annihilate(f, full)) < 1e-13);
  }
  omp_set_num_threads(threads);
}

TEST_CASE("cyclic vectors", "[ladder]") {
  const auto b = build_basis(2, 3);
  CHECK(dist(build_cyclic_vector({}, b), FockVector::vacuum(b)) == 0.0);
  const std::vector<OneParticleVector> fs{OneParticleVector::unit(2, 0), OneParticleVector::unit(2, 1)};
  CHECK(dist(build_cyclic_vector(fs, b), ket(b, {1, 1})) < 1e-15);
  const std::vector<OneParticleVector> too_many(4, OneParticleVector::unit(2, 0));
  CHECK_THROWS_AS(build_cyclic_vector(too_many, b), TruncationOverflow);
}

TEST_CASE("cyclic vector products are permanents", "[ladder][property]") {
  const auto b = build_basis(4, 5);
  Rng rng(12);
  for (int n = 0; n <= 5; ++n) {
    std::vector<OneParticleVector> fs, gs;
    for (int k = 0; k < n; ++k) {
      fs.push_back(OneParticleVector::random(4, rng));
      gs.push_back(OneParticleVector::random(4, rng));
    }
    CMatrix gram(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) gram(j, k) = inner_product(fs[j], gs[k]);
    const auto pf = build_cyclic_vector(fs, b);
    const auto pg = build_cyclic_vector(gs, b);
    CHECK(std::abs(inner_product(pf, pg) - permanent(gram)) <= 1e-11 * pf.norm() * pg.norm());
  }
}

TEST_CASE("alpha norms", "[ladder]") {
  const auto b = build_basis(2, 3);
  const auto vac = FockVector::vacuum(b);
  CHECK_THAT(alpha_norm(vac, 0.7), WithinAbs(1.0, 1e-15));
  CHECK_THAT(alpha_norm(vac + ket(b, {1, 0}), 1.0), WithinAbs(std::sqrt(5.0), 1e-15));
  Rng rng(6);
  const auto phi = 2.5 * random_state(b, rng, 0, 3);
  CHECK(alpha_norm(phi, 0.0) == phi.norm());
  CHECK_THAT(alpha_norm(phi, 1.5), WithinAbs(apply_number_power(phi, 1.5, 1.0).norm(), 1e-13));
}

TEST_CASE("number powers", "[ladder]") {
  const auto b = build_basis(3, 4);
  Rng rng(2);
  const auto phi = random_sector_state(b, rng, 3);
  CHECK(dist(apply_number_power(phi, 1.0), 3.0 * phi) < 1e-14);
  const auto vac = FockVector::vacuum(b);
  CHECK(dist(apply_number_power(vac, 0.5, 2.0), std::sqrt(2.0) * vac) < 1e-15);
  const auto any = random_state(b, rng, 0, 4);
  CHECK(dist(apply_number_power(any, 0.0), any) == 0.0);
  CHECK_THROWS(apply_number_power(any, -1.0));
}
