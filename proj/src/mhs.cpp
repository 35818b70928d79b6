#include "hodgeconn/mhs.hpp"

#include "hodgeconn/errors.hpp"

namespace hodge {

namespace {

void check_shape(const ComplexMHS& v) {
  if (v.W.ambient() != v.dim || v.Fp.ambient() != v.dim || v.Fpp.ambient() != v.dim)
    throw DimensionMismatch("the three filtrations do not share the ambient space");
  if (!v.W.increasing() || v.Fp.increasing() || v.Fpp.increasing())
    throw InputError("W must be increasing and F', F'' decreasing");
}

}  // namespace

std::string MHSViolation::str() const {
  return "gr^" + std::to_string(p) + "_F' gr^" + std::to_string(q) + "_F'' gr^W_" + std::to_string(n) +
         " has dimension " + std::to_string(dim) + " but n != p+q";
}

GradedPieces graded_pieces(const ComplexMHS& v) {
  check_shape(v);
  GradedPieces out;
  if (v.dim == 0) return out;
  const int p0 = v.Fp.min_index(), p1 = v.Fp.max_index();
  const int q0 = v.Fpp.min_index(), q1 = v.Fpp.max_index();
  for (const auto& [n, wn] : v.W.jumps()) {
    Subspace below = v.W.at(n - 1);
    auto fp = induced_filtration_on_quotient(v.Fp.window(p0, p1 + 1), wn, below);
    auto fpp = induced_filtration_on_quotient(v.Fpp.window(q0, q1 + 1), wn, below);
    const int np = p1 - p0 + 2, nq = q1 - q0 + 2;
    // d[a][b] = dim(F'^{p0+a} & F''^{q0+b}) in gr_n
    std::vector<std::vector<long>> d(np, std::vector<long>(nq));
    for (int a = 0; a < np; ++a) {
      if (a > 0 && fp[a] == fp[a - 1]) {
        d[a] = d[a - 1];
        continue;
      }
      for (int b = 0; b < nq; ++b) {
        if (b > 0 && fpp[b] == fpp[b - 1]) d[a][b] = d[a][b - 1];
        else if (fp[a].is_zero() || fpp[b].is_zero()) d[a][b] = 0;
        else if (fp[a].is_full()) d[a][b] = static_cast<long>(fpp[b].dim());
        else if (fpp[b].is_full()) d[a][b] = static_cast<long>(fp[a].dim());
        else d[a][b] = static_cast<long>((fp[a] & fpp[b]).dim());
      }
    }
    for (int a = 0; a + 1 < np; ++a)
      for (int b = 0; b + 1 < nq; ++b) {
        long piece = d[a][b] - d[a + 1][b] - d[a][b + 1] + d[a + 1][b + 1];
        if (piece != 0) out[{n, p0 + a, q0 + b}] = static_cast<std::size_t>(piece);
      }
  }
  return out;
}

MHSCheck check_mhs(const ComplexMHS& v) {
  MHSCheck result;
  for (const auto& [key, d] : graded_pieces(v)) {
    auto [n, p, q] = key;
    if (n != p + q) {
      result.violation = MHSViolation{n, p, q, d};
      result.hodge.clear();
      return result;
    }
    result.hodge[{p, q}] += d;
  }
  return result;
}

HodgeNumbers validate_mhs(const ComplexMHS& v) {
  MHSCheck c = check_mhs(v);
  if (!c.ok()) throw MathViolation("not a mixed Hodge structure: " + c.violation->str());
  return c.hodge;
}

ComplexMHS conjugate_mhs(const ComplexMHS& v) {
  return ComplexMHS{v.dim, v.W.conj(), v.Fpp.conj(), v.Fp.conj()};
}

ComplexMHS realize_real(const RealMHS& v) {
  for (const auto& [k, s] : v.W.jumps())
    if (!s.basis().is_real()) throw InputError("weight filtration of a real structure must be rational");
  ComplexMHS c{v.dim, v.W, v.F, v.F.conj()};
  validate_mhs(c);
  return c;
}

ComplexMHS tensor_mhs(const ComplexMHS& a, const ComplexMHS& b) {
  check_shape(a);
  check_shape(b);
  return ComplexMHS{a.dim * b.dim, tensor_filtration(a.W, b.W), tensor_filtration(a.Fp, b.Fp),
                    tensor_filtration(a.Fpp, b.Fpp)};
}

ComplexMHS dual_mhs(const ComplexMHS& v) {
  check_shape(v);
  return ComplexMHS{v.dim, dual_filtration(v.W), dual_filtration(v.Fp), dual_filtration(v.Fpp)};
}

ComplexMHS direct_sum_mhs(const ComplexMHS& a, const ComplexMHS& b) {
  check_shape(a);
  check_shape(b);
  return ComplexMHS{a.dim + b.dim, direct_sum_filtration(a.W, b.W), direct_sum_filtration(a.Fp, b.Fp),
                    direct_sum_filtration(a.Fpp, b.Fpp)};
}

ComplexMHS transform_mhs(const ComplexMHS& v, const Matrix& g) {
  check_shape(v);
  return ComplexMHS{v.dim, v.W.transform(g), v.Fp.transform(g), v.Fpp.transform(g)};
}

bool validate_morphism(const Matrix& f, const ComplexMHS& source, const ComplexMHS& target) {
  check_shape(source);
  check_shape(target);
  if (f.rows() != target.dim || f.cols() != source.dim)
    throw DimensionMismatch("morphism must be " + std::to_string(target.dim) + "x" + std::to_string(source.dim));
  return source.W.mapped_into(f, target.W) && source.Fp.mapped_into(f, target.Fp) &&
         source.Fpp.mapped_into(f, target.Fpp);
}

ComplexMHS pure_mhs(int p, int q) {
  return ComplexMHS{1, Filtration::pure(Direction::Increasing, 1, p + q), Filtration::pure(Direction::Decreasing, 1, p),
                    Filtration::pure(Direction::Decreasing, 1, q)};
}

std::size_t total(const HodgeNumbers& h) {
  std::size_t s = 0;
  for (const auto& [k, d] : h) s += d;
  return s;
}

}  // namespace hodge
