#include "hodgeconn/connection.hpp"

#include <algorithm>

#include "hodgeconn/errors.hpp"
#include "hodgeconn/freelie.hpp"

namespace hodge {

namespace {

BlockMap checked_blocks(const BigradedSpace& space, BlockMap blocks, const char* what) {
  for (auto it = blocks.begin(); it != blocks.end();) {
    auto [p, q] = it->first;
    const Matrix& m = it->second;
    if (m.rows() != space.dim() || m.cols() != space.dim())
      throw DimensionMismatch(std::string(what) + " block has the wrong shape");
    if (m.is_zero()) {
      it = blocks.erase(it);
      continue;
    }
    if (p < 1 || q < 1)
      throw MathViolation(std::string(what) + " block (" + std::to_string(p) + "," + std::to_string(q) + ") needs p, q >= 1");
    if (!space.has_bidegree(m, p, q))
      throw MathViolation(std::string(what) + " block (" + std::to_string(p) + "," + std::to_string(q) +
                          ") does not have bidegree (-p,-q)");
    ++it;
  }
  return blocks;
}

int weight_spread(const BigradedSpace& s) {
  if (s.dim() == 0) return 0;
  auto w = [](const Bidegree& b) { return b.first + b.second; };
  return w(s.labels().back()) - w(s.labels().front());
}

PolyMatrix unipotent_inverse(const PolyMatrix& g) {
  const std::size_t n = g.rows();
  PolyMatrix nil = g - PolyMatrix::constant(Matrix::identity(n));
  PolyMatrix inv = PolyMatrix::constant(Matrix::identity(n));
  PolyMatrix power = PolyMatrix::constant(Matrix::identity(n));
  for (std::size_t k = 1; k <= n + 1; ++k) {
    power = -(power * nil);
    if (power.is_zero()) return inv;
    inv += power;
  }
  throw NotNilpotent("gauge transformation is not unipotent");
}

}  // namespace

EquivariantConnection::EquivariantConnection(BigradedSpace space, BlockMap a, BlockMap b)
    : space_(std::move(space)), a_(checked_blocks(space_, std::move(a), "A")), b_(checked_blocks(space_, std::move(b), "B")) {}

Matrix EquivariantConnection::A(Bidegree pq) const {
  auto it = a_.find(pq);
  return it == a_.end() ? Matrix(dim(), dim()) : it->second;
}

Matrix EquivariantConnection::B(Bidegree pq) const {
  auto it = b_.find(pq);
  return it == b_.end() ? Matrix(dim(), dim()) : it->second;
}

GaugeTransformation::GaugeTransformation(BigradedSpace space, BlockMap c)
    : space_(std::move(space)), c_(checked_blocks(space_, std::move(c), "gauge")) {}

PolyMatrix GaugeTransformation::polynomial() const {
  PolyMatrix g = PolyMatrix::constant(Matrix::identity(space_.dim()));
  for (const auto& [pq, m] : c_) g.add_term({pq.first, pq.second}, m);
  return g;
}

GaugeTransformation GaugeTransformation::compose(const GaugeTransformation& h) const {
  if (!(h.space_ == space_)) throw DimensionMismatch("gauge transformations on different spaces");
  PolyMatrix prod = polynomial() * h.polynomial();
  BlockMap c;
  for (const auto& [e, m] : prod.terms())
    if (e != Exponent{0, 0}) c.emplace(Bidegree{e[0], e[1]}, m);
  return GaugeTransformation(space_, std::move(c));
}

ConnectionForm connection_form(const EquivariantConnection& c) {
  const std::size_t n = c.dim();
  ConnectionForm f{PolyMatrix(n, n), PolyMatrix(n, n)};
  for (const auto& [pq, m] : c.A()) f.P.add_term({pq.first - 1, pq.second}, m);
  for (const auto& [pq, m] : c.B()) f.Q.add_term({pq.first, pq.second - 1}, m);
  return f;
}

PolyMatrix curvature(const EquivariantConnection& c) {
  ConnectionForm f = connection_form(c);
  return f.Q.derivative(0) - f.P.derivative(1) + f.P * f.Q - f.Q * f.P;
}

bool is_flat(const EquivariantConnection& c) { return curvature(c).is_zero(); }

EquivariantConnection apply_gauge(const EquivariantConnection& c, const GaugeTransformation& g) {
  if (!(c.space() == g.space())) throw DimensionMismatch("connection and gauge live on different spaces");
  if (g.is_identity()) return c;
  ConnectionForm f = connection_form(c);
  PolyMatrix gp = g.polynomial();
  PolyMatrix gi = unipotent_inverse(gp);
  PolyMatrix p = gi * gp.derivative(0) + gi * f.P * gp;
  PolyMatrix q = gi * gp.derivative(1) + gi * f.Q * gp;
  BlockMap a, b;
  for (const auto& [e, m] : p.terms()) a.emplace(Bidegree{e[0] + 1, e[1]}, m);
  for (const auto& [e, m] : q.terms()) b.emplace(Bidegree{e[0], e[1] + 1}, m);
  return EquivariantConnection(c.space(), std::move(a), std::move(b));
}

bool is_fock_schwinger(const EquivariantConnection& c) {
  for (const auto& [pq, m] : c.A())
    if (!(c.B(pq) == -m)) return false;
  for (const auto& [pq, m] : c.B())
    if (!c.A().count(pq)) return false;
  return true;
}

std::pair<EquivariantConnection, GaugeTransformation> normalize_fock_schwinger(const EquivariantConnection& c) {
  EquivariantConnection cur = c;
  GaugeTransformation total = GaugeTransformation::identity(c.space());
  const int spread = weight_spread(c.space());
  for (int d = 2; d <= spread; ++d) {
    BlockMap step;
    for (int p = 1; p < d; ++p) {
      Bidegree pq{p, d - p};
      Matrix s = cur.A(pq) + cur.B(pq);
      if (!s.is_zero()) step.emplace(pq, s * Scalar::rational(-1, d));
    }
    if (step.empty()) continue;
    GaugeTransformation g(c.space(), std::move(step));
    cur = apply_gauge(cur, g);
    total = total.compose(g);
  }
  if (!is_fock_schwinger(cur)) throw MathViolation("normalization did not reach the A + B = 0 gauge");
  return {cur, total};
}

EquivariantConnection connection_from_delta(const DeltaObject& d) {
  auto comps = log_delta_components(d);
  if (comps.empty()) return EquivariantConnection(d.space, {}, {});
  auto tables = universal_tables(std::max(2, weight_spread(d.space)));
  const std::size_t n = d.space.dim();
  std::vector<Matrix> mats;
  for (const auto& deg : tables->z.degrees) {
    auto it = comps.find(deg);
    mats.push_back(it == comps.end() ? Matrix(n, n) : it->second);
  }
  BlockMap a, b;
  for (const auto& [pq, lie] : tables->alpha_in_z) {
    Matrix m = substitute(lie, mats);
    if (m.is_zero()) continue;
    b.emplace(pq, -m);
    a.emplace(pq, std::move(m));
  }
  return EquivariantConnection(d.space, std::move(a), std::move(b));
}

}  // namespace hodge
