#include "hodgeconn/matrix.hpp"

#include <sstream>

#include "hodgeconn/errors.hpp"

namespace hodge {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(what) + ": shape mismatch");
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j, const Scalar& value) {
  Matrix m(n, n);
  m(i, j) = value;
  return m;
}

Vector Matrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return Vector(r.begin(), r.end());
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool Matrix::is_real() const {
  for (const auto& x : data_)
    if (!x.is_real()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj() const {
  Matrix c = *this;
  for (auto& x : c.data_) x = x.conj();
  return c;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimension mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product: dimension mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << ']';
  return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s)
          if (!b(r, s).is_zero()) k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
    }
  return k;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw DimensionMismatch("vstack: column mismatch");
  std::size_t cols = a.rows() ? a.cols() : b.cols();
  Matrix m(a.rows() + b.rows(), cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

Matrix submatrix(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  Matrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

RowEchelon row_reduce(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    if (!m(r, c).is_one()) {
      Scalar inv = m(r, c).inverse();
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = std::move(m(i, j));
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Matrix(0, n);
  return row_reduce(Matrix::from_rows(basis, n)).reduced;
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw MathViolation("matrix is singular");
  return *inv;
}

bool is_nilpotent(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("nilpotency test of non-square matrix");
  Matrix p = m;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

Matrix exp_nilpotent(const Matrix& n) {
  if (!is_nilpotent(n)) throw NotNilpotent("exp_nilpotent: argument is not nilpotent");
  Matrix result = Matrix::identity(n.rows());
  Matrix term = Matrix::identity(n.rows());
  for (long k = 1; k <= static_cast<long>(n.rows()); ++k) {
    term = term * n * Scalar::rational(1, k);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

Matrix log_unipotent(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("log of non-square matrix");
  Matrix x = m - Matrix::identity(m.rows());
  if (!is_nilpotent(x)) throw NotNilpotent("log_unipotent: M - I is not nilpotent");
  Matrix result(m.rows(), m.cols());
  Matrix power = x;
  for (long k = 1; !power.is_zero(); ++k) {
    result += power * Scalar::rational(k % 2 ? 1 : -1, k);
    power = power * x;
  }
  return result;
}

Matrix inverse_unipotent(const Matrix& m) {
  Matrix x = Matrix::identity(m.rows()) - m;
  if (!is_nilpotent(x)) throw NotNilpotent("inverse_unipotent: M - I is not nilpotent");
  Matrix result = Matrix::identity(m.rows());
  Matrix power = x;
  while (!power.is_zero()) {
    result += power;
    power = power * x;
  }
  return result;
}

}  // namespace hodge
