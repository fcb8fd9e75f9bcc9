#include "fockbound/oneparticle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "fockbound/errors.hpp"

namespace fockbound {
namespace {

bool all_finite(const auto& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a) + " and " +
                            std::to_string(b));
  }
}

}  // namespace

OneParticleVector::OneParticleVector(CVector entries) : entries_(std::move(entries)) {
  if (entries_.size() < 1) throw std::invalid_argument("OneParticleVector: d must be >= 1");
  if (!all_finite(entries_)) throw std::invalid_argument("OneParticleVector: non-finite entry");
}

OneParticleVector::OneParticleVector(std::initializer_list<Complex> entries)
    : OneParticleVector(CVector::Map(entries.begin(), static_cast<Eigen::Index>(entries.size()))) {}

OneParticleVector OneParticleVector::unit(int d, int j) {
  if (j < 0 || j >= d) throw std::out_of_range("OneParticleVector::unit: index out of range");
  CVector v = CVector::Zero(d);
  v[j] = 1.0;
  return OneParticleVector(std::move(v));
}

OneParticleVector OneParticleVector::zero(int d) { return OneParticleVector(CVector::Zero(d)); }

OneParticleVector OneParticleVector::random(int d, Rng& rng) {
  CVector v(d);
  for (int i = 0; i < d; ++i) v[i] = rng.complex_normal();
  return OneParticleVector(std::move(v));
}

OneParticleVector OneParticleVector::conjugate() const {
  return OneParticleVector(CVector(entries_.conjugate()));
}

OneParticleVector operator+(const OneParticleVector& a, const OneParticleVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector sum");
  return OneParticleVector(CVector(a.entries_ + b.entries_));
}

OneParticleVector operator-(const OneParticleVector& a, const OneParticleVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector difference");
  return OneParticleVector(CVector(a.entries_ - b.entries_));
}

OneParticleVector operator*(Complex s, const OneParticleVector& v) {
  return OneParticleVector(CVector(s * v.entries_));
}

OneParticleOperator::OneParticleOperator(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw std::invalid_argument("OneParticleOperator: matrix must be square with d >= 1");
  }
  if (!all_finite(entries_)) throw std::invalid_argument("OneParticleOperator: non-finite entry");
}

OneParticleOperator OneParticleOperator::identity(int d) {
  return OneParticleOperator(CMatrix::Identity(d, d));
}

OneParticleOperator OneParticleOperator::zero(int d) {
  return OneParticleOperator(CMatrix::Zero(d, d));
}

OneParticleOperator OneParticleOperator::diagonal(const std::vector<Complex>& diag) {
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(diag.size()),
                            static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return OneParticleOperator(std::move(m));
}

OneParticleOperator OneParticleOperator::rank_one(const OneParticleVector& u,
                                                  const OneParticleVector& v) {
  require_same_dim(u.dim(), v.dim(), "rank_one");
  return OneParticleOperator(CMatrix(u.entries() * v.entries().adjoint()));
}

OneParticleOperator OneParticleOperator::swap(int d) {
  if (d < 2) throw std::invalid_argument("swap operator needs d >= 2");
  CMatrix m = CMatrix::Identity(d, d);
  m(0, 0) = m(1, 1) = 0.0;
  m(0, 1) = m(1, 0) = 1.0;
  return OneParticleOperator(std::move(m));
}

OneParticleOperator OneParticleOperator::random(int d, Rng& rng) {
  CMatrix m(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) m(i, j) = rng.complex_normal();
  return OneParticleOperator(std::move(m));
}

OneParticleOperator OneParticleOperator::random_symmetric(int d, Rng& rng) {
  const OneParticleOperator x = random(d, rng);
  return OneParticleOperator(CMatrix(0.5 * (x.entries_ + x.entries_.transpose())));
}

OneParticleOperator OneParticleOperator::conjugate() const {
  return OneParticleOperator(CMatrix(entries_.conjugate()));
}

OneParticleOperator OneParticleOperator::adjoint() const {
  return OneParticleOperator(CMatrix(entries_.adjoint()));
}

OneParticleOperator OneParticleOperator::transpose() const { return conjugate().adjoint(); }

OneParticleVector OneParticleOperator::operator*(const OneParticleVector& v) const {
  require_same_dim(dim(), v.dim(), "operator application");
  return OneParticleVector(CVector(entries_ * v.entries()));
}

OneParticleOperator operator*(const OneParticleOperator& a, const OneParticleOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator product");
  return OneParticleOperator(CMatrix(a.entries_ * b.entries_));
}

OneParticleOperator operator+(const OneParticleOperator& a, const OneParticleOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator sum");
  return OneParticleOperator(CMatrix(a.entries_ + b.entries_));
}

OneParticleOperator operator-(const OneParticleOperator& a, const OneParticleOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator difference");
  return OneParticleOperator(CMatrix(a.entries_ - b.entries_));
}

OneParticleOperator operator*(Complex s, const OneParticleOperator& a) {
  return OneParticleOperator(CMatrix(s * a.entries_));
}

Complex inner_product(const OneParticleVector& f, const OneParticleVector& g) {
  require_same_dim(f.dim(), g.dim(), "inner_product");
  return f.entries().dot(g.entries());  // Eigen's dot conjugates the left operand
}

Complex conjugate_pairing(const OneParticleVector& f, const OneParticleVector& g) {
  require_same_dim(f.dim(), g.dim(), "conjugate_pairing");
  return (f.entries().array() * g.entries().array()).sum();
}

OneParticleVector conjugate_map(const OneParticleVector& x) { return x.conjugate(); }
OneParticleOperator conjugate_map(const OneParticleOperator& x) { return x.conjugate(); }

double operator_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

double operator_norm(const OneParticleOperator& a) { return operator_norm(a.entries()); }

double hs_norm(const OneParticleOperator& a) { return a.entries().norm(); }

std::vector<double> singular_values(const OneParticleOperator& a) {
  Eigen::JacobiSVD<CMatrix> svd(a.entries());
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

OrthonormalSystem::OrthonormalSystem(CMatrix columns) : columns_(std::move(columns)) {
  if (columns_.rows() < 1) throw std::invalid_argument("OrthonormalSystem: d must be >= 1");
  if (columns_.cols() > columns_.rows()) {
    throw std::invalid_argument("OrthonormalSystem: more vectors than dimensions");
  }
  if (!all_finite(columns_)) throw std::invalid_argument("OrthonormalSystem: non-finite entry");
  if (orthonormality_residual() > 1e-12) {
    throw std::invalid_argument("OrthonormalSystem: columns are not orthonormal");
  }
}

OrthonormalSystem OrthonormalSystem::canonical(int d) {
  return OrthonormalSystem(CMatrix::Identity(d, d));
}

OneParticleVector OrthonormalSystem::vector(int j) const {
  return OneParticleVector(CVector(columns_.col(j)));
}

CMatrix OrthonormalSystem::projector(int m) const {
  const auto block = columns_.leftCols(m);
  return block * block.adjoint();
}

OrthonormalSystem OrthonormalSystem::conjugate() const {
  return OrthonormalSystem(CMatrix(columns_.conjugate()));
}

double OrthonormalSystem::orthonormality_residual() const {
  if (columns_.cols() == 0) return 0.0;
  const CMatrix gram = columns_.adjoint() * columns_;
  return (gram - CMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

OrthonormalSystem random_orthonormal_system(int d, int m, std::uint64_t seed) {
  if (d < 1 || m < 1 || m > d) {
    throw std::invalid_argument("random_orthonormal_system: need 1 <= M <= d");
  }
  Rng rng(seed);
  CMatrix g(d, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < d; ++i) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, m);
  return OrthonormalSystem(std::move(q));
}

Complex permanent(const CMatrix& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("permanent: matrix must be square");
  const int n = static_cast<int>(g.rows());
  if (n > kPermanentMaxOrder) {
    throw CostGuardExceeded("permanent: order " + std::to_string(n) + " exceeds guard " +
                            std::to_string(kPermanentMaxOrder));
  }
  if (n == 0) return 1.0;

  // perm(G) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} g_ij, subsets in Gray order
  std::vector<Complex> row_sums(n, 0.0);
  Complex total = 0.0;
  std::uint64_t gray = 0;
  int subset_size = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    const int j = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << j;
    const bool adding = (gray & bit) == 0;
    gray ^= bit;
    subset_size += adding ? 1 : -1;
    for (int i = 0; i < n; ++i) row_sums[i] += adding ? g(i, j) : -g(i, j);
    Complex prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= row_sums[i];
    total += (subset_size % 2 == 0) ? prod : -prod;
  }
  return (n % 2 == 0) ? total : -total;
}

}  // namespace fockbound
