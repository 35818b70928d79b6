#include "hodgeconn/hodgecoh.hpp"

#include <map>
#include <tuple>

#include "hodgeconn/errors.hpp"
#include "hodgeconn/splitting.hpp"

namespace hodge {

namespace {

using Key = std::tuple<int, std::size_t>;  // (slot, vector); exponents follow from the label

// Real 2m x 2n matrix of a complex m x n matrix in (re, im) block coordinates.
Matrix realify(const Matrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  Matrix out(2 * r, 2 * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      Scalar re(m(i, j).re()), im(m(i, j).im());
      out(i, j) = re;
      out(i, c + j) = -im;
      out(r + i, j) = im;
      out(r + i, c + j) = re;
    }
  return out;
}

// x -> m conj(x), realified.
Matrix realify_antilinear(const Matrix& m) {
  Matrix out = realify(m);
  const std::size_t c = m.cols();
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = c; j < 2 * c; ++j) out(i, j) = -out(i, j);
  return out;
}

// Matrix of x -> s conj(x) on a monomial basis, where s acts on the vector part
// and labels are mapped by (a, b, slot) -> (b, a, swapped slot).
Matrix sigma_on(const std::vector<MonomialLabel>& basis, const Matrix& s) {
  std::map<std::tuple<std::size_t, int, int, int>, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k)
    index[{basis[k].vector, basis[k].a, basis[k].b, basis[k].slot}] = k;
  Matrix out(basis.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const MonomialLabel& l = basis[k];
    int slot = l.slot == 0 ? 0 : 3 - l.slot;
    for (std::size_t i = 0; i < s.rows(); ++i) {
      if (s(i, l.vector).is_zero()) continue;
      auto it = index.find({i, l.b, l.a, slot});
      if (it == index.end()) throw MathViolation("conjugation does not preserve the invariant basis");
      out(it->second, k) = s(i, l.vector);
    }
  }
  return out;
}

}  // namespace

std::string MonomialLabel::str() const {
  std::string s = "v" + std::to_string(vector);
  if (a) s += "*t1^" + std::to_string(a);
  if (b) s += "*t2^" + std::to_string(b);
  if (slot) s += "*dt" + std::to_string(slot);
  return s;
}

TwoTermComplex invariant_complex(const EquivariantConnection& c) {
  const BigradedSpace& sp = c.space();
  TwoTermComplex k;
  std::map<Key, std::size_t> row;
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    auto [p, q] = sp.label(i);
    if (p <= 0 && q <= 0) k.domain.push_back({i, -p, -q, 0});
  }
  for (int slot = 1; slot <= 2; ++slot)
    for (std::size_t i = 0; i < sp.dim(); ++i) {
      auto [p, q] = sp.label(i);
      int a = slot == 1 ? -p - 1 : -p;
      int b = slot == 1 ? -q : -q - 1;
      if (a < 0 || b < 0) continue;
      row[{slot, i}] = k.codomain.size();
      k.codomain.push_back({i, a, b, slot});
    }
  k.map = Matrix(k.codomain.size(), k.domain.size());
  for (std::size_t col = 0; col < k.domain.size(); ++col) {
    const MonomialLabel& s = k.domain[col];
    if (s.a > 0) k.map(row.at({1, s.vector}), col) += Scalar(s.a);
    if (s.b > 0) k.map(row.at({2, s.vector}), col) += Scalar(s.b);
    for (int slot = 1; slot <= 2; ++slot) {
      const BlockMap& blocks = slot == 1 ? c.A() : c.B();
      for (const auto& [pq, m] : blocks)
        for (std::size_t i = 0; i < sp.dim(); ++i) {
          if (m(i, s.vector).is_zero()) continue;
          k.map(row.at({slot, i}), col) += m(i, s.vector);
        }
    }
  }
  return k;
}

AbsoluteCohomology cohomology(const TwoTermComplex& k) {
  AbsoluteCohomology h;
  h.kernel = kernel(k.map);
  h.ext0 = h.kernel.rows();
  RowEchelon image = row_reduce(k.map.transpose());
  std::vector<bool> hit(k.codomain.size(), false);
  for (std::size_t p : image.pivots) hit[p] = true;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (!hit[i]) h.cokernel_basis.push_back(i);
  h.ext1 = h.cokernel_basis.size();
  return h;
}

AbsoluteCohomology absolute_cohomology(const EquivariantConnection& c) {
  return cohomology(invariant_complex(c));
}

AbsoluteCohomology absolute_cohomology(const ComplexMHS& v) {
  return absolute_cohomology(connection_from_delta(delta_operator(v)));
}

AbsoluteCohomology absolute_ext(const ComplexMHS& a, const ComplexMHS& b) {
  return absolute_cohomology(tensor_mhs(dual_mhs(a), b));
}

std::size_t hom_from_unit(const ComplexMHS& v) {
  return (v.W.at(0) & v.Fp.at(0) & v.Fpp.at(0)).dim();
}

std::pair<std::size_t, std::size_t> real_absolute_cohomology(const RealMHS& v) {
  ComplexMHS c = realize_real(v);
  DeligneData data = deligne_data(c);
  // conjugation on gr: conj(L' x) = L'' S x
  Matrix s = inverse(data.lift_Fpp) * data.lift_Fp.conj();
  if (!(s * s.conj()).is_identity()) throw MathViolation("conjugation on gr is not an involution");
  EquivariantConnection conn = connection_from_delta(DeltaObject{data.gr, data.delta});
  TwoTermComplex k = invariant_complex(conn);
  Matrix sd = realify_antilinear(sigma_on(k.domain, s));
  Matrix sc = realify_antilinear(sigma_on(k.codomain, s));
  Matrix m = realify(k.map);
  if (!(m * sd == sc * m)) throw MathViolation("invariant complex is not conjugation-equivariant");
  const std::size_t nd = sd.rows(), nc = sc.rows();
  Matrix fixed_d = kernel(sd - Matrix::identity(nd));
  Matrix fixed_c = kernel(sc - Matrix::identity(nc));
  // image of the fixed domain basis, one vector per row
  Matrix img = (m * fixed_d.transpose()).transpose();
  std::size_t r = rank(img);
  return {fixed_d.rows() - r, fixed_c.rows() - r};
}

}  // namespace hodge
