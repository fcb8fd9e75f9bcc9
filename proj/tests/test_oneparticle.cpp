#include <algorithm>
#include <cmath>
#include <numeric>

#include "catch_amalgamated.hpp"

#include "fockbound/errors.hpp"
#include "fockbound/oneparticle.hpp"
#include "fockbound/rng.hpp"

using namespace fockbound;
using Catch::Matchers::WithinAbs;

namespace {

const Complex I{0.0, 1.0};

// sup of ||Av|| over random unit vectors, each best start polished by power steps on A*A
double sup_oracle(const CMatrix& a, Rng& rng, int starts) {
  const int d = static_cast<int>(a.cols());
  double best = 0.0;
  CVector best_v;
  for (int s = 0; s < starts; ++s) {
    CVector v(d);
    for (int i = 0; i < d; ++i) v[i] = rng.complex_normal();
    v.normalize();
    const double val = (a * v).norm();
    if (val > best) {
      best = val;
      best_v = v;
    }
  }
  for (int it = 0; it < 500; ++it) {
    best_v = a.adjoint() * (a * best_v);
    best_v.normalize();
    best = std::max(best, (a * best_v).norm());
  }
  return best;
}

Complex naive_permanent(const CMatrix& g) {
  const int n = static_cast<int>(g.rows());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Complex sum = 0.0;
  do {
    Complex prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= g(i, p[i]);
    sum += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

}  // namespace

TEST_CASE("inner product examples", "[oneparticle]") {
  CHECK(std::abs(inner_product(OneParticleVector{1.0, 0.0}, OneParticleVector{0.0, 1.0})) == 0.0);
  CHECK(std::abs(inner_product(OneParticleVector{I, 0.0}, OneParticleVector{I, 0.0}) - 1.0) < 1e-15);
  CHECK(std::abs(inner_product(OneParticleVector{1.0, 1.0}, OneParticleVector{1.0, -1.0})) == 0.0);
}

TEST_CASE("inner product is antilinear in the first slot", "[oneparticle][property]") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto f = OneParticleVector::random(5, rng);
    const auto g = OneParticleVector::random(5, rng);
    const Complex s = rng.complex_normal();
    CHECK(std::abs(inner_product(s * f, g) - std::conj(s) * inner_product(f, g)) < 1e-12);
    CHECK(std::abs(inner_product(f, s * g) - s * inner_product(f, g)) < 1e-12);
    CHECK(std::abs(inner_product(f, g) - std::conj(inner_product(g, f))) < 1e-12);
    // (conj f, g) is bilinear
    CHECK(std::abs(conjugate_pairing(f, g) - inner_product(f.conjugate(), g)) < 1e-12);
    CHECK(std::abs(conjugate_pairing(f, g) - conjugate_pairing(g, f)) < 1e-12);
  }
}

TEST_CASE("conjugation", "[oneparticle]") {
  const auto x = conjugate_map(OneParticleVector{I, 1.0 - I});
  CHECK(x[0] == -I);
  CHECK(x[1] == 1.0 + I);

  CMatrix real(2, 2);
  real << 1.0, 2.0, 3.0, 4.0;
  CHECK(conjugate_map(OneParticleOperator(real)).entries() == real);

  Rng rng(3);
  const auto a = OneParticleOperator::random(4, rng);
  CHECK((a.transpose().entries() - CMatrix(a.entries().transpose())).norm() == 0.0);
  CHECK((a.adjoint().entries() - CMatrix(a.entries().adjoint())).norm() == 0.0);
  CHECK((conjugate_map(conjugate_map(a)).entries() - a.entries()).norm() == 0.0);
}

TEST_CASE("operator norm", "[oneparticle]") {
  CHECK_THAT(operator_norm(OneParticleOperator::identity(5)), WithinAbs(1.0, 1e-14));
  CHECK_THAT(operator_norm(OneParticleOperator::diagonal({3.0, -1.0})), WithinAbs(3.0, 1e-14));

  Rng rng(2024);
  for (int t = 0; t < 5; ++t) {
    const auto a = OneParticleOperator::random(4, rng);
    const double norm = operator_norm(a);
    const double sup = sup_oracle(a.entries(), rng, 10000);
    CHECK(sup <= norm * (1 + 1e-12));
    CHECK_THAT(norm, WithinAbs(sup, 1e-6));
  }
}

TEST_CASE("Hilbert-Schmidt norm", "[oneparticle]") {
  CHECK_THAT(hs_norm(OneParticleOperator::identity(3)), WithinAbs(std::sqrt(3.0), 1e-14));
  CHECK_THAT(hs_norm(OneParticleOperator::diagonal({3.0, -1.0})), WithinAbs(std::sqrt(10.0), 1e-14));

  Rng rng(5);
  const auto u = OneParticleVector::random(4, rng);
  const auto v = OneParticleVector::random(4, rng);
  const auto r = OneParticleOperator::rank_one(u, v);
  CHECK_THAT(hs_norm(r), WithinAbs(u.norm() * v.norm(), 1e-12));
  CHECK_THAT(operator_norm(r), WithinAbs(u.norm() * v.norm(), 1e-12));

  for (int t = 0; t < 20; ++t) {
    const auto a = OneParticleOperator::random(5, rng);
    const auto s = singular_values(a);
    const double sum = std::accumulate(s.begin(), s.end(), 0.0, [](double acc, double x) { return acc + x * x; });
    CHECK_THAT(hs_norm(a), WithinAbs(std::sqrt(sum), 1e-12));
    CHECK(operator_norm(a) <= hs_norm(a) + 1e-12);
    CHECK(hs_norm(a) <= std::sqrt(5.0) * operator_norm(a) + 1e-12);
  }
}

TEST_CASE("random orthonormal systems", "[oneparticle]") {
  const auto a = random_orthonormal_system(3, 3, 77);
  const auto b = random_orthonormal_system(3, 3, 77);
  CHECK(a.columns() == b.columns());
  CHECK((a.columns().adjoint() * a.columns() - CMatrix::Identity(3, 3)).norm() <= 1e-12);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = random_orthonormal_system(4, 2, seed);
    CHECK(s.size() == 2);
    CHECK(std::abs(inner_product(s.vector(0), s.vector(1))) <= 1e-12);
    CHECK(s.orthonormality_residual() <= 1e-12);
  }
  CHECK_THROWS_AS(random_orthonormal_system(3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_orthonormal_system(3, 0, 1), std::invalid_argument);

  CMatrix bad = CMatrix::Identity(3, 2);
  bad(0, 1) = 0.5;
  CHECK_THROWS(OrthonormalSystem(bad));
}

TEST_CASE("permanent", "[oneparticle]") {
  CHECK(permanent(CMatrix::Ones(2, 2)) == Complex(2.0));
  CMatrix m(2, 2);
  m << 2.0, I, 3.0, 5.0;
  CHECK(std::abs(permanent(m) - (2.0 * 5.0 + I * 3.0)) < 1e-15);
  CHECK(permanent(CMatrix(0, 0)) == Complex(1.0));

  Rng rng(9);
  for (int n = 1; n <= 7; ++n) {
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
    const Complex naive = naive_permanent(g);
    const double tol = n == 3 ? 1e-13 : 1e-12 * std::max(1.0, std::abs(naive));
    CHECK(std::abs(permanent(g) - naive) <= tol);
  }
  CHECK_THROWS_AS(permanent(CMatrix::Ones(kPermanentMaxOrder + 1, kPermanentMaxOrder + 1)),
                  CostGuardExceeded);
}

TEST_CASE("validation", "[oneparticle]") {
  CHECK_THROWS(OneParticleVector(CVector(0)));
  CVector nan_v(2);
  nan_v << std::nan(""), 0.0;
  CHECK_THROWS(OneParticleVector(nan_v));
  CHECK_THROWS_AS(OneParticleOperator::identity(2) * OneParticleVector::unit(3, 0), DimensionMismatch);
  CHECK_THROWS_AS(inner_product(OneParticleVector::unit(2, 0), OneParticleVector::unit(3, 0)),
                  DimensionMismatch);
}
