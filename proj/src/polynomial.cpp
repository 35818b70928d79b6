#include "hodgeconn/polynomial.hpp"

#include <sstream>

#include "hodgeconn/errors.hpp"

namespace hodge {

namespace {

void require_one_variable(const PolyMatrix& p, const char* what) {
  for (const auto& [e, m] : p.terms())
    if (e[1] != 0) throw DimensionMismatch(std::string(what) + ": expected a one-variable polynomial");
}

// (a + d t)^k as coefficients of t^0..t^k.
std::vector<Scalar> affine_power(const Scalar& a, const Scalar& d, int k) {
  std::vector<Scalar> c{Scalar(1)};
  for (int step = 0; step < k; ++step) {
    std::vector<Scalar> next(c.size() + 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j].is_zero()) continue;
      if (!a.is_zero()) next[j] += c[j] * a;
      if (!d.is_zero()) next[j + 1] += c[j] * d;
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

Scalar power(const Scalar& x, int k) {
  if (k < 0) return power(x.inverse(), -k);
  Scalar r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

PolyMatrix PolyMatrix::constant(const Matrix& m, bool laurent) {
  return monomial(m, {0, 0}, laurent);
}

PolyMatrix PolyMatrix::monomial(const Matrix& m, Exponent e, bool laurent) {
  PolyMatrix p(m.rows(), m.cols(), laurent);
  p.add_term(e, m);
  return p;
}

Matrix PolyMatrix::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Matrix(rows_, cols_) : it->second;
}

void PolyMatrix::add_term(Exponent e, const Matrix& m) {
  if (m.rows() != rows_ || m.cols() != cols_) throw DimensionMismatch("polynomial term shape mismatch");
  if (!laurent_ && (e[0] < 0 || e[1] < 0))
    throw DimensionMismatch("negative exponent in a non-Laurent polynomial");
  if (m.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, m);
    return;
  }
  it->second += m;
  if (it->second.is_zero()) terms_.erase(it);
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  laurent_ = laurent_ || o.laurent_;
  for (const auto& [e, m] : o.terms_) add_term(e, m);
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  laurent_ = laurent_ || o.laurent_;
  for (const auto& [e, m] : o.terms_) add_term(e, -m);
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("polynomial matrix product: inner dimension mismatch");
  PolyMatrix p(a.rows_, b.cols_, a.laurent_ || b.laurent_);
  for (const auto& [ea, ma] : a.terms_)
    for (const auto& [eb, mb] : b.terms_) p.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ma * mb);
  return p;
}

PolyMatrix operator*(const Scalar& s, const PolyMatrix& p) {
  PolyMatrix r(p.rows_, p.cols_, p.laurent_);
  if (s.is_zero()) return r;
  for (const auto& [e, m] : p.terms_) r.add_term(e, m * s);
  return r;
}

PolyMatrix PolyMatrix::operator-() const { return Scalar(-1) * *this; }

PolyMatrix PolyMatrix::derivative(int var) const {
  PolyMatrix d(rows_, cols_, laurent_);
  for (const auto& [e, m] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    d.add_term(f, m * Scalar(e[var]));
  }
  return d;
}

Matrix PolyMatrix::evaluate(const Scalar& x, const Scalar& y) const {
  Matrix r(rows_, cols_);
  for (const auto& [e, m] : terms_) {
    Scalar c = power(x, e[0]) * power(y, e[1]);
    if (!c.is_zero()) r += m * c;
  }
  return r;
}

PolyMatrix PolyMatrix::compose_affine(const std::array<Scalar, 2>& base,
                                      const std::array<Scalar, 2>& dir) const {
  if (laurent_) {
    for (const auto& [e, m] : terms_)
      if (e[0] < 0 || e[1] < 0) throw DimensionMismatch("compose_affine: Laurent input");
  }
  PolyMatrix out(rows_, cols_);
  for (const auto& [e, m] : terms_) {
    auto c0 = affine_power(base[0], dir[0], e[0]);
    auto c1 = affine_power(base[1], dir[1], e[1]);
    for (std::size_t i = 0; i < c0.size(); ++i) {
      if (c0[i].is_zero()) continue;
      for (std::size_t j = 0; j < c1.size(); ++j) {
        if (c1[j].is_zero()) continue;
        out.add_term({static_cast<int>(i + j), 0}, m * (c0[i] * c1[j]));
      }
    }
  }
  return out;
}

PolyMatrix PolyMatrix::antiderivative(const Scalar& lower) const {
  require_one_variable(*this, "antiderivative");
  PolyMatrix out(rows_, cols_, laurent_);
  for (const auto& [e, m] : terms_) {
    if (e[0] == -1) throw MathViolation("antiderivative: 1/x term has no polynomial antiderivative");
    Scalar inv = Scalar::rational(1, e[0] + 1);
    out.add_term({e[0] + 1, 0}, m * inv);
    Scalar at_lower = power(lower, e[0] + 1);
    if (!at_lower.is_zero()) out.add_term({0, 0}, m * (-(inv * at_lower)));
  }
  return out;
}

int PolyMatrix::max_abs_exponent(int var) const {
  int best = 0;
  for (const auto& [e, m] : terms_) best = std::max(best, std::abs(e[var]));
  return best;
}

PolyMatrix PolyMatrix::conj() const {
  PolyMatrix out(rows_, cols_, laurent_);
  for (const auto& [e, m] : terms_) out.add_term(e, m.conj());
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(cols_, rows_, laurent_);
  for (const auto& [e, m] : terms_) out.add_term(e, m.transpose());
  return out;
}

std::string PolyMatrix::str(const char* x, const char* y) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, m] : terms_) {
    os << (first ? "" : " + ") << m.str();
    if (e[0] != 0) os << '*' << x << '^' << e[0];
    if (e[1] != 0) os << '*' << y << '^' << e[1];
    first = false;
  }
  return os.str();
}

Matrix integrate_poly_segment(const PolyMatrix& p, const Scalar& a, const Scalar& b) {
  PolyMatrix anti = p.antiderivative(a);
  return anti.evaluate(b);
}

}  // namespace hodge
