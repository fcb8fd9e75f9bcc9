#pragma once

// Finite model of the one-particle space C^d. The conjugation J is fixed to
// entrywise complex conjugation in the canonical basis; conjugates and
// transposes of operators derive from it.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "fockbound/rng.hpp"

namespace fockbound {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

class OneParticleVector {
 public:
  explicit OneParticleVector(CVector entries);
  OneParticleVector(std::initializer_list<Complex> entries);

  /// Canonical basis vector e_j, 0-based.
  static OneParticleVector unit(int d, int j);
  static OneParticleVector zero(int d);
  /// i.i.d. circular complex Gaussian entries.
  static OneParticleVector random(int d, Rng& rng);

  int dim() const { return static_cast<int>(entries_.size()); }
  Complex operator[](int i) const { return entries_[i]; }
  const CVector& entries() const { return entries_; }
  double norm() const { return entries_.norm(); }
  OneParticleVector conjugate() const;

  friend OneParticleVector operator+(const OneParticleVector& a, const OneParticleVector& b);
  friend OneParticleVector operator-(const OneParticleVector& a, const OneParticleVector& b);
  friend OneParticleVector operator*(Complex s, const OneParticleVector& v);

 private:
  CVector entries_;
};

class OneParticleOperator {
 public:
  explicit OneParticleOperator(CMatrix entries);

  static OneParticleOperator identity(int d);
  static OneParticleOperator zero(int d);
  static OneParticleOperator diagonal(const std::vector<Complex>& diag);
  /// u v^* ; both norms multiply into the operator and Hilbert-Schmidt norms.
  static OneParticleOperator rank_one(const OneParticleVector& u, const OneParticleVector& v);
  /// Exchange of modes 0 and 1, identity elsewhere. Requires d >= 2.
  static OneParticleOperator swap(int d);
  static OneParticleOperator random(int d, Rng& rng);
  /// Random X with transpose(X) == X.
  static OneParticleOperator random_symmetric(int d, Rng& rng);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  Complex operator()(int i, int j) const { return entries_(i, j); }

  /// JXJ.
  OneParticleOperator conjugate() const;
  OneParticleOperator adjoint() const;
  /// adjoint(conjugate(X)).
  OneParticleOperator transpose() const;

  OneParticleVector operator*(const OneParticleVector& v) const;
  friend OneParticleOperator operator*(const OneParticleOperator& a, const OneParticleOperator& b);
  friend OneParticleOperator operator+(const OneParticleOperator& a, const OneParticleOperator& b);
  friend OneParticleOperator operator-(const OneParticleOperator& a, const OneParticleOperator& b);
  friend OneParticleOperator operator*(Complex s, const OneParticleOperator& a);

 private:
  CMatrix entries_;
};

/// Hermitian product, antilinear in the first argument.
Complex inner_product(const OneParticleVector& f, const OneParticleVector& g);
/// (conj f, g) = sum_j f_j g_j, the CCR scalar.
Complex conjugate_pairing(const OneParticleVector& f, const OneParticleVector& g);

OneParticleVector conjugate_map(const OneParticleVector& x);
OneParticleOperator conjugate_map(const OneParticleOperator& x);

/// Largest singular value.
double operator_norm(const OneParticleOperator& a);
double operator_norm(const CMatrix& a);
/// Frobenius norm.
double hs_norm(const OneParticleOperator& a);
std::vector<double> singular_values(const OneParticleOperator& a);

class OrthonormalSystem {
 public:
  /// Columns must be orthonormal to 1e-12.
  explicit OrthonormalSystem(CMatrix columns);

  static OrthonormalSystem canonical(int d);

  int dim() const { return static_cast<int>(columns_.rows()); }
  int size() const { return static_cast<int>(columns_.cols()); }
  bool complete() const { return size() == dim(); }
  const CMatrix& columns() const { return columns_; }
  /// e_j, 0-based.
  OneParticleVector vector(int j) const;
  /// sum_{j < m} e_j e_j^*.
  CMatrix projector(int m) const;
  OrthonormalSystem conjugate() const;
  double orthonormality_residual() const;

 private:
  CMatrix columns_;
};

/// m orthonormal columns from a QR of a seeded complex Gaussian d x m matrix.
OrthonormalSystem random_orthonormal_system(int d, int m, std::uint64_t seed);

inline constexpr int kPermanentMaxOrder = 12;

/// Ryser's formula with Gray-code row-sum updates, O(2^n n).
Complex permanent(const CMatrix& g);

}  // namespace fockbound
