#include <vector>

#include "catch_amalgamated.hpp"

#include "fockbound/errors.hpp"
#include "fockbound/fock_basis.hpp"

using namespace fockbound;

namespace {

Index binomial(int n, int k) {
  Index r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("basis dimension and order", "[fock_basis]") {
  FockBasis b(2, 2);
  REQUIRE(b.dim() == 6);
  const std::vector<std::vector<int>> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  for (Index i = 0; i < 6; ++i) CHECK(b.occupation_of(i) == expected[i]);

  CHECK(FockBasis(1, 5).dim() == 6);
  CHECK(FockBasis(6, 4).dim() == 210);
  CHECK(FockBasis(6, 4).sector_size(4) == 126);
}

TEST_CASE("sector sizes are binomial", "[fock_basis][property]") {
  for (int d = 1; d <= 7; ++d) {
    for (int n_max = 0; n_max <= 5; ++n_max) {
      FockBasis b(d, n_max);
      Index total = 0;
      for (int n = 0; n <= n_max; ++n) {
        CHECK(b.sector_size(n) == binomial(n + d - 1, d - 1));
        CHECK(b.sector_offset(n) == total);
        total += b.sector_size(n);
      }
      CHECK(b.dim() == total);
      CHECK(FockBasis::count_compositions(d, n_max) == binomial(n_max + d - 1, d - 1));
    }
  }
}

TEST_CASE("ranking round-trips and order is graded colex", "[fock_basis][property]") {
  FockBasis b(5, 4);
  for (Index i = 0; i < b.dim(); ++i) {
    const auto occ = b.occupation_of(i);
    CHECK(b.index_of(occ) == i);
    int n = 0;
    for (int x : occ) n += x;
    CHECK(b.sector_of(i) == n);
    if (i + 1 < b.dim() && b.sector_of(i + 1) == n) {
      // next state is larger when compared from the last mode down
      const auto next = b.occupation_of(i + 1);
      CHECK(std::lexicographical_compare(occ.rbegin(), occ.rend(), next.rbegin(), next.rend()));
    }
  }
}

TEST_CASE("raise and lower tables", "[fock_basis]") {
  FockBasis b(4, 3);
  for (Index i = 0; i < b.dim(); ++i) {
    const auto occ = b.occupation_of(i);
    for (int j = 0; j < 4; ++j) {
      auto up = occ;
      ++up[j];
      if (b.sector_of(i) < 3) {
        CHECK(b.raised(i, j) == b.index_of(up));
        CHECK(b.lowered(b.raised(i, j), j) == i);
      } else {
        CHECK(b.raised(i, j) == -1);
      }
      if (occ[j] == 0) CHECK(b.lowered(i, j) == -1);
    }
  }
}

TEST_CASE("ladder factors and guards", "[fock_basis]") {
  FockBasis b(2, 3);
  CHECK(b.ladder_factor(0) == 0.0);
  CHECK(b.ladder_factor(4) == 2.0);
  FockBasis tampered(2, 3, [](int k) { return double(k); });
  CHECK(tampered.ladder_factor(3) == 3.0);

  CHECK_THROWS(FockBasis(0, 2));
  CHECK_THROWS(FockBasis(2, -1));
  CHECK_THROWS_AS(FockBasis(200, 10), CostGuardExceeded);
  CHECK_THROWS(b.index_of(std::vector<int>{1, 1, 1}));
  CHECK_THROWS(b.index_of(std::vector<int>{4, 0}));
}
