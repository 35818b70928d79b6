#pragma once

#include <array>
#include <map>
#include <string>

#include "hodgeconn/matrix.hpp"

namespace hodge {

/// Exponent vector of a monomial in two variables. One-variable polynomials
/// use exponents {k, 0}.
using Exponent = std::array<int, 2>;

/// Matrix-valued (Laurent) polynomial sum_e M_e x^e0 y^e1.
///
/// Zero coefficients are never stored. Negative exponents are only admitted
/// when the Laurent flag is set.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, bool laurent = false)
      : rows_(rows), cols_(cols), laurent_(laurent) {}

  static PolyMatrix constant(const Matrix& m, bool laurent = false);
  static PolyMatrix monomial(const Matrix& m, Exponent e, bool laurent = false);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool laurent() const { return laurent_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Matrix>& terms() const { return terms_; }
  Matrix coefficient(Exponent e) const;

  void add_term(Exponent e, const Matrix& m);

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Scalar& s, const PolyMatrix& p);
  PolyMatrix operator-() const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.terms_ == b.terms_;
  }

  /// Partial derivative in variable `var` (0 or 1).
  PolyMatrix derivative(int var) const;
  /// Evaluate at (x, y). Negative exponents need nonzero coordinates.
  Matrix evaluate(const Scalar& x, const Scalar& y = Scalar(0)) const;
  /// One-variable polynomial p(base + tau * dir) in tau. Requires a
  /// polynomial (non-Laurent) input.
  PolyMatrix compose_affine(const std::array<Scalar, 2>& base, const std::array<Scalar, 2>& dir) const;
  /// For one-variable input: x -> int_lower^x p(s) ds.
  PolyMatrix antiderivative(const Scalar& lower) const;
  /// Largest |exponent| of variable `var` among stored terms.
  int max_abs_exponent(int var) const;
  /// Entrywise complex conjugation of coefficients.
  PolyMatrix conj() const;
  PolyMatrix transpose() const;

  std::string str(const char* x = "x", const char* y = "y") const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool laurent_ = false;
  std::map<Exponent, Matrix> terms_;
};

/// Exact entrywise integral int_a^b p(t) dt of a one-variable polynomial
/// matrix.
Matrix integrate_poly_segment(const PolyMatrix& p, const Scalar& a, const Scalar& b);

/// x^k for k >= 0, or for k < 0 when x is nonzero.
Scalar power(const Scalar& x, int k);

}  // namespace hodge
