#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hodgeconn/scalar.hpp"

namespace hodge {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(i). Matrices act on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  /// Matrix unit E_{ij}.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j, const Scalar& value = 1);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vector row_vector(std::size_t i) const;
  Vector column(std::size_t j) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_real() const;

  Matrix transpose() const;
  Matrix conj() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  Matrix operator-() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Rows `rows` and columns `cols` of m, in the given order.
Matrix submatrix(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

/// Reduced row echelon form with zero rows removed.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis (as rows, in reduced echelon form) of {x : m x = 0}.
Matrix kernel(const Matrix& m);
std::optional<Matrix> try_inverse(const Matrix& m);
/// Throws MathViolation when singular.
Matrix inverse(const Matrix& m);

/// True iff m^k = 0 for some k <= dim.
bool is_nilpotent(const Matrix& m);
/// exp of a nilpotent matrix as a finite sum. Throws NotNilpotent.
Matrix exp_nilpotent(const Matrix& n);
/// Logarithm of a unipotent matrix, sum_{k>=1} (-1)^{k+1} (M-I)^k / k.
/// Throws NotNilpotent when M - I is not nilpotent.
Matrix log_unipotent(const Matrix& m);
/// Inverse of a unipotent matrix by the finite geometric series.
Matrix inverse_unipotent(const Matrix& m);

}  // namespace hodge
