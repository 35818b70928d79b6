#include "hodgeconn/splitting.hpp"

#include <algorithm>
#include <numeric>

#include "hodgeconn/errors.hpp"

namespace hodge {

namespace {

// Deligne's formula for the piece of the side whose filtration is `own`.
Subspace splitting_piece(const ComplexMHS& v, const Filtration& own, const Filtration& other, int p, int q) {
  const int n = p + q;
  Subspace wn = v.W.at(n);
  Subspace tail = other.at(q) & wn;
  for (int j = 1; n - j - 1 >= v.W.min_index(); ++j) tail = tail + (other.at(q - j) & v.W.at(n - j - 1));
  return (own.at(p) & wn) & tail;
}

// Columns: lifts of the rows of `targets` (quotient coordinates) into `piece`.
std::vector<Vector> lift_into(const QuotientChart& chart, const Subspace& piece, const Matrix& targets) {
  Matrix coords(piece.dim(), chart.dim());
  for (std::size_t r = 0; r < piece.dim(); ++r) {
    Vector c = chart.coords(piece.basis().row_vector(r));
    for (std::size_t k = 0; k < c.size(); ++k) coords(r, k) = c[k];
  }
  RowEchelon e = row_reduce(coords);
  if (e.reduced.rows() != piece.dim()) throw MathViolation("splitting piece does not inject into gr");
  std::vector<std::size_t> all(piece.dim());
  std::iota(all.begin(), all.end(), 0);
  // x * coords = target  =>  x = target restricted to pivots * coords_piv^{-1}
  Matrix piv_inv = inverse(submatrix(coords, all, e.pivots));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < targets.rows(); ++r) {
    Vector t(piece.dim());
    for (std::size_t k = 0; k < piece.dim(); ++k) t[k] = targets(r, e.pivots[k]);
    Vector x(piece.dim());
    for (std::size_t a = 0; a < piece.dim(); ++a)
      for (std::size_t b = 0; b < piece.dim(); ++b) x[a] += t[b] * piv_inv(b, a);
    Vector lifted(piece.ambient());
    for (std::size_t a = 0; a < piece.dim(); ++a)
      for (std::size_t k = 0; k < piece.ambient(); ++k) lifted[k] += x[a] * piece.basis()(a, k);
    out.push_back(std::move(lifted));
  }
  return out;
}

Matrix from_columns(const std::vector<Vector>& cols, std::size_t n) {
  Matrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace

bool Bigrading::is_direct() const {
  std::size_t total_dim = 0;
  for (const auto& [pq, s] : pieces) total_dim += s.dim();
  return total_dim == ambient && sum_where([](const Bidegree&) { return true; }).dim() == ambient;
}

void validate_delta(const DeltaObject& d) {
  const std::size_t n = d.space.dim();
  if (d.delta.rows() != n || d.delta.cols() != n)
    throw DimensionMismatch("delta must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!d.space.strictly_lowering(d.delta - Matrix::identity(n)))
    throw MathViolation("delta - 1 does not strictly lower both degrees");
}

Bigrading deligne_splitting(const ComplexMHS& v, Side side) {
  HodgeNumbers h = validate_mhs(v);
  Bigrading b{v.dim, {}};
  for (const auto& [pq, d] : h) {
    auto [p, q] = pq;
    Subspace s = side == Side::Fp ? splitting_piece(v, v.Fp, v.Fpp, p, q) : splitting_piece(v, v.Fpp, v.Fp, q, p);
    if (s.dim() != d) throw MathViolation("splitting piece has the wrong dimension");
    b.pieces.emplace(pq, std::move(s));
  }
  if (!b.is_direct()) throw MathViolation("splitting pieces do not form a direct sum");
  return b;
}

DeligneData deligne_data(const ComplexMHS& v) {
  DeligneData out;
  out.split_Fp = deligne_splitting(v, Side::Fp);
  out.split_Fpp = deligne_splitting(v, Side::Fpp);
  for (const auto& [pq, s] : out.split_Fp.pieces) out.hodge[pq] = s.dim();
  out.gr = BigradedSpace::from_hodge(out.hodge);

  std::vector<Vector> cols_fp, cols_fpp;
  for (const auto& [n, wn] : v.W.jumps()) {
    QuotientChart chart(wn, v.W.at(n - 1));
    std::vector<Bidegree> here;
    for (const auto& [pq, d] : out.hodge)
      if (pq.first + pq.second == n) here.push_back(pq);
    std::sort(here.begin(), here.end(), canonical_less);
    for (const auto& pq : here) {
      const Subspace& a = out.split_Fp.pieces.at(pq);
      const Subspace& b = out.split_Fpp.pieces.at(pq);
      Subspace image = chart.project(a);
      if (!(image == chart.project(b)))
        throw MathViolation("the two splittings disagree modulo lower weight");
      auto la = lift_into(chart, a, image.basis());
      auto lb = lift_into(chart, b, image.basis());
      cols_fp.insert(cols_fp.end(), la.begin(), la.end());
      cols_fpp.insert(cols_fpp.end(), lb.begin(), lb.end());
    }
  }
  out.lift_Fp = from_columns(cols_fp, v.dim);
  out.lift_Fpp = from_columns(cols_fpp, v.dim);
  out.delta = inverse(out.lift_Fpp) * out.lift_Fp;
  validate_delta(DeltaObject{out.gr, out.delta});
  return out;
}

DeltaObject delta_operator(const ComplexMHS& v) {
  DeligneData d = deligne_data(v);
  return DeltaObject{d.gr, d.delta};
}

std::map<Bidegree, Matrix> log_delta_components(const DeltaObject& d) {
  validate_delta(d);
  Matrix log = log_unipotent(d.delta);
  std::map<Bidegree, Matrix> out;
  const std::size_t n = d.space.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (log(i, j).is_zero()) continue;
      Bidegree pq{d.space.label(j).first - d.space.label(i).first, d.space.label(j).second - d.space.label(i).second};
      if (pq.first < 1 || pq.second < 1) throw MathViolation("log delta has a component that is not strictly lowering");
      auto [it, fresh] = out.try_emplace(pq, n, n);
      it->second(i, j) = log(i, j);
    }
  return out;
}

ComplexMHS delta_to_mhs(const DeltaObject& d, bool self_check) {
  validate_delta(d);
  const std::size_t n = d.space.dim();
  const auto& labels = d.space.labels();
  auto span_where = [&](auto pred) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (pred(labels[i])) idx.push_back(i);
    return Subspace::coordinate(n, idx);
  };
  std::map<int, Subspace> w, fp, fpp;
  Matrix inv = inverse_unipotent(d.delta);
  for (const auto& [p, q] : labels) {
    int wt = p + q;
    w.try_emplace(wt, span_where([wt](const Bidegree& l) { return l.first + l.second <= wt; }));
    fp.try_emplace(p, span_where([p](const Bidegree& l) { return l.first >= p; }));
    fpp.try_emplace(q, span_where([q](const Bidegree& l) { return l.second >= q; }).image(inv));
  }
  ComplexMHS v{n, Filtration(Direction::Increasing, n, w), Filtration(Direction::Decreasing, n, fp),
               Filtration(Direction::Decreasing, n, fpp)};
  if (self_check) {
    DeltaObject back = delta_operator(v);
    if (!(back == d)) throw MathViolation("delta_to_mhs round trip failed");
  }
  return v;
}

DeltaObject conjugate_delta(const DeltaObject& d) {
  validate_delta(d);
  const std::size_t n = d.space.dim();
  std::vector<Bidegree> swapped;
  for (const auto& [p, q] : d.space.labels()) swapped.emplace_back(q, p);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return canonical_less(swapped[a], swapped[b]); });
  Matrix perm(n, n);
  std::vector<Bidegree> labels;
  for (std::size_t k = 0; k < n; ++k) {
    perm(k, order[k]) = 1;
    labels.push_back(swapped[order[k]]);
  }
  Matrix delta = perm * inverse_unipotent(d.delta).conj() * perm.transpose();
  return DeltaObject{BigradedSpace(std::move(labels)), std::move(delta)};
}

}  // namespace hodge
