#include "fockbound/fock_basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fockbound/errors.hpp"

namespace fockbound {
namespace {

constexpr Index kSaturated = std::numeric_limits<Index>::max() / 4;

// compositions of m into the first k modes, colex order, appended to out
void enumerate_sector(int k, int m, std::vector<std::uint16_t>& prefix_tail,
                      std::vector<std::uint16_t>& out, int modes) {
  if (k == 1) {
    prefix_tail[0] = static_cast<std::uint16_t>(m);
    out.insert(out.end(), prefix_tail.begin(), prefix_tail.begin() + modes);
    return;
  }
  for (int t = 0; t <= m; ++t) {
    prefix_tail[k - 1] = static_cast<std::uint16_t>(t);
    enumerate_sector(k - 1, m - t, prefix_tail, out, modes);
  }
}

}  // namespace

Index FockBasis::count_compositions(int modes, int particles) {
  // C(particles + modes - 1, particles), saturating
  if (modes <= 0) return particles == 0 ? 1 : 0;
  unsigned __int128 c = 1;
  for (int i = 1; i <= particles; ++i) {
    c = c * static_cast<unsigned>(modes - 1 + i) / static_cast<unsigned>(i);
    if (c > static_cast<unsigned __int128>(kSaturated)) return kSaturated;
  }
  return static_cast<Index>(c);
}

FockBasis::FockBasis(int modes, int n_max, const LadderFactor& factor)
    : modes_(modes), n_max_(n_max) {
  if (modes < 1) throw std::invalid_argument("FockBasis: d must be >= 1");
  if (n_max < 0) throw std::invalid_argument("FockBasis: n_max must be >= 0");
  if (n_max > std::numeric_limits<std::uint16_t>::max() - 1) {
    throw CostGuardExceeded("FockBasis: n_max too large");
  }

  sector_offsets_.assign(1, 0);
  for (int n = 0; n <= n_max; ++n) {
    const Index total = sector_offsets_.back() + count_compositions(modes, n);
    if (total > kMaxDim) {
      throw CostGuardExceeded("FockBasis: dimension exceeds " + std::to_string(kMaxDim));
    }
    sector_offsets_.push_back(total);
  }
  const Index total = dim();

  compositions_.resize(static_cast<std::size_t>(modes + 1) * (n_max + 1));
  for (int k = 0; k <= modes; ++k)
    for (int m = 0; m <= n_max; ++m)
      compositions_[k * (n_max + 1) + m] = count_compositions(k, m);

  occupations_.reserve(static_cast<std::size_t>(total) * modes);
  std::vector<std::uint16_t> scratch(modes, 0);
  for (int n = 0; n <= n_max; ++n) enumerate_sector(modes, n, scratch, occupations_, modes);

  raise_.assign(static_cast<std::size_t>(total) * modes, -1);
  lower_.assign(static_cast<std::size_t>(total) * modes, -1);
  std::vector<int> occ(modes);
  for (Index idx = 0; idx < total; ++idx) {
    const auto o = occupation(idx);
    std::copy(o.begin(), o.end(), occ.begin());
    const int n = sector_of(idx);
    for (int j = 0; j < modes; ++j) {
      if (n < n_max) {
        ++occ[j];
        raise_[idx * modes + j] = static_cast<std::int32_t>(index_of(occ));
        --occ[j];
      }
      if (occ[j] > 0) {
        --occ[j];
        lower_[idx * modes + j] = static_cast<std::int32_t>(index_of(occ));
        ++occ[j];
      }
    }
  }

  factors_.resize(n_max + 2);
  for (int k = 0; k <= n_max + 1; ++k) {
    factors_[k] = factor ? factor(k) : std::sqrt(static_cast<double>(k));
  }
}

int FockBasis::sector_of(Index idx) const {
  if (idx < 0 || idx >= dim()) throw std::out_of_range("FockBasis::sector_of: bad index");
  const auto it = std::upper_bound(sector_offsets_.begin(), sector_offsets_.end(), idx);
  return static_cast<int>(it - sector_offsets_.begin()) - 1;
}

std::vector<int> FockBasis::occupation_of(Index idx) const {
  if (idx < 0 || idx >= dim()) throw std::out_of_range("FockBasis::occupation_of: bad index");
  const auto o = occupation(idx);
  return {o.begin(), o.end()};
}

Index FockBasis::index_of(std::span<const int> occupation) const {
  if (static_cast<int>(occupation.size()) != modes_) {
    throw DimensionMismatch("FockBasis::index_of: occupation length differs from d");
  }
  int n = 0;
  for (int v : occupation) {
    if (v < 0) throw std::invalid_argument("FockBasis::index_of: negative occupation");
    n += v;
  }
  if (n > n_max_) throw std::out_of_range("FockBasis::index_of: occupation above n_max");

  Index rank = 0;
  int remaining = n;
  for (int k = modes_; k >= 2; --k) {
    const int last = occupation[k - 1];
    for (int t = 0; t < last; ++t) rank += compositions(k - 1, remaining - t);
    remaining -= last;
  }
  return sector_offsets_[n] + rank;
}

BasisPtr build_basis(int modes, int n_max, const FockBasis::LadderFactor& factor) {
  return std::make_shared<const FockBasis>(modes, n_max, factor);
}

}  // namespace fockbound
