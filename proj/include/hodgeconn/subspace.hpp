#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hodgeconn/matrix.hpp"

namespace hodge {

/// Subspace of K^n stored as the reduced row echelon form of a basis, so two
/// subspaces are equal exactly when their representations are.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : basis_(0, ambient) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) { return span(Matrix::identity(n)); }
  /// Row span of `rows`.
  static Subspace span(const Matrix& rows);
  static Subspace span(const std::vector<Vector>& rows, std::size_t ambient);
  /// Span of the standard basis vectors with the given indices.
  static Subspace coordinate(std::size_t n, std::span<const std::size_t> indices);

  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Entrywise complex conjugate.
  Subspace conj() const;
  /// f(S) for f an m x n matrix acting on column vectors.
  Subspace image(const Matrix& f) const;
  /// {phi in (K^n)* : phi(s) = 0 for all s in S}, via the bilinear pairing.
  Subspace annihilator() const;
  /// Reduce v modulo this subspace: clear the pivot columns.
  Vector reduce(Vector v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
inline Subspace operator+(const Subspace& a, const Subspace& b) { return subspace_sum(a, b); }
inline Subspace operator&(const Subspace& a, const Subspace& b) { return subspace_intersect(a, b); }
/// Span of {a (x) b}: the tensor product inside K^{n m}, index i*m + j.
Subspace tensor(const Subspace& a, const Subspace& b);
/// Direct sum inside K^{n+m}.
Subspace direct_sum(const Subspace& a, const Subspace& b);

/// Coordinates on a quotient S/T, T contained in S.
///
/// The quotient is modelled on the echelon complement C = S intersected with
/// {x : x_c = 0 for every pivot column c of T}; C (+) T = S and C depends only
/// on S and T. Quotient coordinates of v in S are the entries of (v mod T) at
/// the pivot columns of C.
class QuotientChart {
 public:
  QuotientChart(Subspace whole, Subspace sub);

  std::size_t dim() const { return complement_.dim(); }
  const Subspace& whole() const { return whole_; }
  const Subspace& sub() const { return sub_; }
  const Subspace& complement() const { return complement_; }

  /// Coordinates of v (which must lie in the whole space).
  Vector coords(const Vector& v) const;
  /// The representative in the complement with the given coordinates.
  Vector lift(const Vector& coords) const;
  /// (X intersect S + T)/T in quotient coordinates.
  Subspace project(const Subspace& x) const;

 private:
  Subspace whole_;
  Subspace sub_;
  Subspace complement_;
};

/// The filtration induced on S/T by the steps (F_k intersect S + T)/T, in the
/// coordinates of QuotientChart(S, T). Throws DimensionMismatch when T is not
/// contained in S.
std::vector<Subspace> induced_filtration_on_quotient(std::span<const Subspace> steps,
                                                     const Subspace& whole, const Subspace& sub);

}  // namespace hodge
