#include "hodgeconn/rees.hpp"

#include <algorithm>

#include "hodgeconn/errors.hpp"

namespace hodge {

namespace {

Scalar determinant(Matrix m) {
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Scalar f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

int min_exponent(const PolyMatrix& g) {
  int lo = 0;
  bool first = true;
  for (const auto& [e, m] : g.terms()) {
    lo = first ? e[0] : std::min(lo, e[0]);
    first = false;
  }
  return lo;
}

int max_exponent(const PolyMatrix& g) {
  int hi = 0;
  bool first = true;
  for (const auto& [e, m] : g.terms()) {
    hi = first ? e[0] : std::max(hi, e[0]);
    first = false;
  }
  return hi;
}

// Largest positive exponent of G^{-1}, or a bound for it.
int inverse_exponent_bound(const PolyMatrix& g, int det_exp) {
  const std::size_t r = g.rows();
  PolyMatrix id = PolyMatrix::constant(Matrix::identity(r), true);
  PolyMatrix nil = id - g;
  PolyMatrix inv = id, power = id;
  for (std::size_t k = 1; k <= r + 1; ++k) {
    power = power * nil;
    if (power.is_zero()) return std::max(0, max_exponent(inv));
    inv += power;
  }
  // adjugate entries have exponent at most (r-1) * max exponent
  return std::max(0, static_cast<int>(r - 1) * std::max(0, max_exponent(g)) - det_exp);
}

std::size_t h0_with_bound(const PolyMatrix& g, int k, int inv_bound) {
  const std::size_t r = g.rows();
  const int deg = k + inv_bound;
  if (deg < 0) return 0;
  const std::size_t unknowns = r * static_cast<std::size_t>(deg + 1);
  // rows: (row i, exponent e > 0) of xi^{-k} G f
  std::map<std::pair<std::size_t, int>, std::size_t> row_index;
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries;
  for (const auto& [e, m] : g.terms())
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (m(i, j).is_zero()) continue;
        for (int d = 0; d <= deg; ++d) {
          int power = e[0] - k + d;
          if (power <= 0) continue;
          auto [it, fresh] = row_index.try_emplace({i, power}, row_index.size());
          entries.emplace_back(it->second, j * static_cast<std::size_t>(deg + 1) + d, m(i, j));
        }
      }
  Matrix sys(row_index.size(), unknowns);
  for (const auto& [row, col, v] : entries) sys(row, col) += v;
  return unknowns - rank(sys);
}

}  // namespace

PolyMatrix rees_patching(const DeltaObject& d) {
  validate_delta(d);
  const std::size_t n = d.space.dim();
  PolyMatrix phi(n, n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (d.delta(i, j).is_zero()) continue;
      const auto& li = d.space.label(i);
      const auto& lj = d.space.label(j);
      int e0 = (lj.first + lj.second) - (li.first + li.second);
      int e1 = li.first - lj.first;
      phi.add_term({e0, e1}, Matrix::unit(n, i, j, d.delta(i, j)));
    }
  return phi;
}

PolyMatrix restrict_to_line(const PolyMatrix& phi, const Scalar& t1, const Scalar& t2) {
  PolyMatrix out(phi.rows(), phi.cols(), true);
  for (const auto& [e, m] : phi.terms()) {
    if (e[0] < 0) throw MathViolation("patching function has a negative power of xi0");
    // (-t2 - t1 xi)^{e0} xi^{e1}
    std::vector<Scalar> c{Scalar(1)};
    for (int s = 0; s < e[0]; ++s) {
      std::vector<Scalar> next(c.size() + 1);
      for (std::size_t j = 0; j < c.size(); ++j) {
        next[j] -= c[j] * t2;
        next[j + 1] -= c[j] * t1;
      }
      c = std::move(next);
    }
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!c[j].is_zero()) out.add_term({static_cast<int>(j) + e[1], 0}, m * c[j]);
  }
  return out;
}

std::optional<std::pair<Scalar, int>> monomial_determinant(const PolyMatrix& g) {
  if (g.rows() != g.cols()) throw DimensionMismatch("transition matrix must be square");
  const std::size_t r = g.rows();
  if (r == 0) return std::make_pair(Scalar(1), 0);
  if (g.is_zero()) return std::nullopt;
  // Row i of G is shifted by xi^{-lo_i}; det of the shifted matrix is a
  // polynomial of degree <= sum (hi_i - lo_i), found by interpolation.
  std::vector<int> lo(r, 0), hi(r, 0);
  std::vector<bool> seen(r, false);
  for (const auto& [e, m] : g.terms())
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (m(i, j).is_zero()) continue;
        lo[i] = seen[i] ? std::min(lo[i], e[0]) : e[0];
        hi[i] = seen[i] ? std::max(hi[i], e[0]) : e[0];
        seen[i] = true;
      }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return std::nullopt;
  std::size_t deg = 0;
  int shift = 0;
  for (std::size_t i = 0; i < r; ++i) {
    deg += static_cast<std::size_t>(hi[i] - lo[i]);
    shift += lo[i];
  }
  std::vector<Scalar> xs, ys;
  for (std::size_t k = 0; k <= deg; ++k) {
    // nodes 0, 1, -1, 2, -2, ...
    long node = k % 2 ? static_cast<long>(k + 1) / 2 : -static_cast<long>(k / 2);
    Scalar x(node);
    Matrix at(r, r);
    for (const auto& [e, m] : g.terms())
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (!m(i, j).is_zero()) at(i, j) += m(i, j) * power(x, e[0] - lo[i]);
    xs.push_back(x);
    ys.push_back(determinant(std::move(at)));
  }
  // Newton divided differences, then expand to monomial coefficients
  std::vector<Scalar> dd = ys;
  for (std::size_t j = 1; j < dd.size(); ++j)
    for (std::size_t i = dd.size() - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  std::vector<Scalar> coeffs{dd.back()};
  for (std::size_t i = dd.size() - 1; i-- > 0;) {
    std::vector<Scalar> next(coeffs.size() + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * xs[i];
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  std::optional<std::pair<Scalar, int>> mono;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    if (mono) return std::nullopt;
    mono = std::make_pair(coeffs[j], static_cast<int>(j) + shift);
  }
  return mono;
}

std::size_t h0(const PolyMatrix& g, int k) {
  auto det = monomial_determinant(g);
  if (!det) throw MathViolation("transition matrix determinant is not a monomial");
  return h0_with_bound(g, k, inverse_exponent_bound(g, det->second));
}

std::vector<int> splitting_type(const PolyMatrix& g) {
  auto det = monomial_determinant(g);
  if (!det) throw MathViolation("transition matrix determinant is not a monomial");
  const int r = static_cast<int>(g.rows());
  if (r == 0) return {};
  const int m = det->second;
  const int bound = inverse_exponent_bound(g, m);
  const int limit = 4 * (std::abs(min_exponent(g)) + std::abs(max_exponent(g)) + bound + r) + 8;
  std::map<int, long> memo;
  auto h = [&](int k) {
    auto it = memo.find(k);
    if (it == memo.end()) it = memo.emplace(k, static_cast<long>(h0_with_bound(g, k, bound))).first;
    return it->second;
  };

  int low = 0;
  while (h(low) > 0) {
    if (--low < -limit) throw MathViolation("splitting type scan did not terminate");
  }
  int high = std::max(low, 0);
  while (h(high) != static_cast<long>(r) * (high + 1) - m) {
    if (++high > limit) throw MathViolation("splitting type scan did not terminate");
  }
  // N(k) = h(k) - h(k-1) = #{a_i >= -k}
  std::vector<int> type;
  long prev_n = 0;
  long prev_h = h(low);
  for (int k = low + 1; k <= high + 1; ++k) {
    long hk = h(k);
    long nk = hk - prev_h;
    for (long c = 0; c < nk - prev_n; ++c) type.push_back(-k);
    prev_n = nk;
    prev_h = hk;
  }
  if (static_cast<int>(type.size()) != r) throw MathViolation("splitting type has the wrong rank");
  int sum = 0;
  for (int a : type) sum += a;
  if (sum != -m) throw MathViolation("splitting type degree disagrees with the determinant");
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::vector<int> two_filtration_rees_type(const Filtration& fp, const Filtration& fpp) {
  if (fp.ambient() != fpp.ambient()) throw DimensionMismatch("filtrations on different spaces");
  if (fp.increasing() || fpp.increasing()) throw InputError("Rees type needs decreasing filtrations");
  std::vector<int> type;
  for (const auto& [p, a] : fp.jumps())
    for (const auto& [q, b] : fpp.jumps()) {
      long d = static_cast<long>((fp.at(p) & fpp.at(q)).dim()) - static_cast<long>((fp.at(p + 1) & fpp.at(q)).dim()) -
               static_cast<long>((fp.at(p) & fpp.at(q + 1)).dim()) +
               static_cast<long>((fp.at(p + 1) & fpp.at(q + 1)).dim());
      type.insert(type.end(), d, p + q);
    }
  std::sort(type.rbegin(), type.rend());
  return type;
}

PolyMatrix weight_line_transition(const ComplexMHS& triple) {
  GradedPieces pieces = graded_pieces(triple);
  PolyMatrix g(triple.dim, triple.dim, true);
  std::size_t i = 0;
  for (const auto& [npq, d] : pieces) {
    auto [n, p, q] = npq;
    for (std::size_t k = 0; k < d; ++k, ++i) g.add_term({-(p + q - n), 0}, Matrix::unit(triple.dim, i, i));
  }
  return g;
}

}  // namespace hodge
