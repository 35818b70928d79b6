#include "hodgeconn/subspace.hpp"

#include "hodgeconn/errors.hpp"

namespace hodge {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch(std::string(what) + ": ambient dimensions " + std::to_string(a.ambient()) +
                            " and " + std::to_string(b.ambient()));
}

}  // namespace

Subspace Subspace::span(const Matrix& rows) {
  Subspace s(rows.cols());
  RowEchelon e = row_reduce(rows);
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& rows, std::size_t ambient) {
  return span(Matrix::from_rows(rows, ambient));
}

Subspace Subspace::coordinate(std::size_t n, std::span<const std::size_t> indices) {
  Matrix m(indices.size(), n);
  for (std::size_t k = 0; k < indices.size(); ++k) m(k, indices[k]) = 1;
  return span(m);
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient()) throw DimensionMismatch("reduce: vector length mismatch");
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient(); ++j)
      if (!basis_(i, j).is_zero()) v[j] -= f * basis_(i, j);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  for (const auto& x : reduce(v))
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "contains");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row_vector(i))) return false;
  return true;
}

Subspace Subspace::conj() const {
  Subspace s = *this;
  s.basis_ = basis_.conj();
  return s;
}

Subspace Subspace::image(const Matrix& f) const {
  if (f.cols() != ambient()) throw DimensionMismatch("image: map does not act on this space");
  if (dim() == 0) return Subspace(f.rows());
  return span(basis_ * f.transpose());
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(ambient());
  return span(kernel(basis_));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_sum");
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_intersect");
  const std::size_t n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  // Zassenhaus: rows (a | a) and (b | 0); rows with zero left half span A n B.
  Matrix z(a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      z(i, j) = a.basis()(i, j);
      z(i, n + j) = a.basis()(i, j);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) z(a.dim() + i, j) = b.basis()(i, j);
  RowEchelon e = row_reduce(std::move(z));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] < n) continue;
    Vector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = e.reduced(i, n + j);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Subspace(n);
  return Subspace::span(rows, n);
}

Subspace tensor(const Subspace& a, const Subspace& b) {
  const std::size_t n = a.ambient() * b.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  return Subspace::span(kron(a.basis(), b.basis()));
}

Subspace direct_sum(const Subspace& a, const Subspace& b) {
  return Subspace::span(block_diagonal(a.basis(), b.basis()));
}

QuotientChart::QuotientChart(Subspace whole, Subspace sub)
    : whole_(std::move(whole)), sub_(std::move(sub)), complement_(whole_.ambient()) {
  if (!whole_.contains(sub_)) throw DimensionMismatch("quotient: T is not contained in S");
  std::vector<Vector> reduced;
  for (std::size_t i = 0; i < whole_.dim(); ++i) reduced.push_back(sub_.reduce(whole_.basis().row_vector(i)));
  if (!reduced.empty()) complement_ = Subspace::span(reduced, whole_.ambient());
}

Vector QuotientChart::coords(const Vector& v) const {
  Vector r = sub_.reduce(v);
  Vector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = r[complement_.pivots()[i]];
  return c;
}

Vector QuotientChart::lift(const Vector& coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("lift: coordinate length mismatch");
  Vector v(whole_.ambient());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!complement_.basis()(i, j).is_zero()) v[j] += coords[i] * complement_.basis()(i, j);
  }
  return v;
}

Subspace QuotientChart::project(const Subspace& x) const {
  Subspace inside = subspace_intersect(x, whole_);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < inside.dim(); ++i) rows.push_back(coords(inside.basis().row_vector(i)));
  if (rows.empty()) return Subspace(dim());
  return Subspace::span(rows, dim());
}

std::vector<Subspace> induced_filtration_on_quotient(std::span<const Subspace> steps,
                                                     const Subspace& whole, const Subspace& sub) {
  QuotientChart chart(whole, sub);
  std::vector<Subspace> out;
  out.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0 && steps[i] == steps[i - 1]) out.push_back(out.back());
    else if (steps[i].is_full()) out.push_back(Subspace::full(chart.dim()));
    else out.push_back(chart.project(steps[i]));
  }
  return out;
}

}  // namespace hodge
