#include "doctest.h"
#include "hodgeconn/connection.hpp"
#include "hodgeconn/errors.hpp"
#include "hodgeconn/fixtures.hpp"
#include "hodgeconn/freelie.hpp"
#include "hodgeconn/holonomy.hpp"

using namespace hodge;

namespace {

const BigradedSpace kKSpace({{-1, -1}, {0, 0}});
const Matrix kE = Matrix::unit(2, 0, 1);  // e_0 -> e_{-1}

BlockMap random_blocks(Rng& rng, const BigradedSpace& s, Field field) {
  BlockMap out;
  const int spread = s.dim() == 0 ? 0
                                  : s.labels().back().first + s.labels().back().second - s.labels().front().first -
                                        s.labels().front().second;
  for (int d = 2; d <= spread; ++d)
    for (int p = 1; p < d; ++p) {
      Matrix m(s.dim(), s.dim());
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
          if (s.label(j).first - s.label(i).first == p && s.label(j).second - s.label(i).second == d - p)
            m(i, j) = random_scalar(rng, field);
      if (!m.is_zero()) out.emplace(Bidegree{p, d - p}, m);
    }
  return out;
}

EquivariantConnection random_connection(Rng& rng, const BigradedSpace& s, Field field = Field::Qi) {
  return EquivariantConnection(s, random_blocks(rng, s, field), random_blocks(rng, s, field));
}

GaugeTransformation random_gauge(Rng& rng, const BigradedSpace& s, Field field = Field::Qi) {
  return GaugeTransformation(s, random_blocks(rng, s, field));
}

int spread(const BigradedSpace& s) {
  return s.labels().back().first + s.labels().back().second - s.labels().front().first - s.labels().front().second;
}

// Second route to the normalized connection with given delta: fix one
// weight level at a time from the holonomy residual and the abelian
// coefficient of that level.
EquivariantConnection connection_by_residuals(const DeltaObject& d) {
  std::map<Bidegree, Matrix> target = log_delta_components(d);
  BlockMap a;
  for (int level = 2; level <= spread(d.space); ++level) {
    BlockMap b;
    for (const auto& [pq, m] : a) b.emplace(pq, -m);
    EquivariantConnection cur(d.space, a, b);
    DeltaObject got{d.space, triangle_delta(cur)};
    auto have = log_delta_components(got);
    for (int p = 1; p < level; ++p) {
      Bidegree pq{p, level - p};
      Matrix want = target.count(pq) ? target.at(pq) : Matrix(d.space.dim(), d.space.dim());
      Matrix now = have.count(pq) ? have.at(pq) : Matrix(d.space.dim(), d.space.dim());
      Matrix fix = (want - now) * Scalar(abelian_integral(p, level - p)).inverse();
      if (fix.is_zero()) continue;
      a[pq] = (a.count(pq) ? a.at(pq) : Matrix(d.space.dim(), d.space.dim())) + fix;
    }
  }
  BlockMap b;
  for (const auto& [pq, m] : a) b.emplace(pq, -m);
  return EquivariantConnection(d.space, a, b);
}

}  // namespace

TEST_CASE("connection form and curvature of the Kummer connection") {
  Scalar a = Scalar::gaussian(3, 1, 1, 2);
  EquivariantConnection zero(kKSpace, {}, {});
  CHECK(connection_form(zero).P.is_zero());
  CHECK(curvature(zero).is_zero());
  EquivariantConnection k(kKSpace, {{{1, 1}, kE * a}}, {{{1, 1}, kE * -a}});
  ConnectionForm f = connection_form(k);
  CHECK(f.P == PolyMatrix::monomial(kE * a, {0, 1}));
  CHECK(f.Q == PolyMatrix::monomial(kE * -a, {1, 0}));
  CHECK(curvature(k) == PolyMatrix::constant(kE * (Scalar(-2) * a)));
  CHECK_FALSE(is_flat(k));
  CHECK_THROWS_AS(EquivariantConnection(kKSpace, {{{1, 2}, kE}}, {}), MathViolation);
  CHECK_THROWS_AS(EquivariantConnection(kKSpace, {{{1, 1}, kE.transpose()}}, {}), MathViolation);

  BigradedSpace t3({{-2, -2}, {-1, -1}, {0, 0}});
  Matrix a11{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, a22 = Matrix::unit(3, 0, 2, 5);
  EquivariantConnection c3(t3, {{{1, 1}, a11}, {{2, 2}, a22}}, {});
  CHECK(connection_form(c3).P.terms().size() == 2);
}

TEST_CASE("gauge transformations") {
  EquivariantConnection zero(kKSpace, {}, {});
  Matrix m = kE * Scalar(7);
  EquivariantConnection g1 = apply_gauge(zero, GaugeTransformation(kKSpace, {{{1, 1}, m}}));
  CHECK(g1.A({1, 1}) == m);
  CHECK(g1.B({1, 1}) == m);
  CHECK(apply_gauge(g1, GaugeTransformation::identity(kKSpace)) == g1);

  Rng rng(12);
  for (int t = 0; t < 25; ++t) {
    BigradedSpace s = random_delta(rng, {5, -4, 4}).space;
    EquivariantConnection c = random_connection(rng, s);
    GaugeTransformation g = random_gauge(rng, s), h = random_gauge(rng, s);
    EquivariantConnection cg = apply_gauge(c, g);
    // g Omega' = dg + Omega g, checked without inverting g
    ConnectionForm f = connection_form(c), fg = connection_form(cg);
    PolyMatrix gp = g.polynomial();
    CHECK(gp * fg.P == gp.derivative(0) + f.P * gp);
    CHECK(gp * fg.Q == gp.derivative(1) + f.Q * gp);
    CHECK(apply_gauge(cg, h) == apply_gauge(c, g.compose(h)));
  }
}

TEST_CASE("Fock-Schwinger normalization") {
  Matrix m = kE * Scalar(4);
  EquivariantConnection c(kKSpace, {{{1, 1}, m}}, {});
  auto [n, g] = normalize_fock_schwinger(c);
  CHECK(n.A({1, 1}) == kE * Scalar(2));
  CHECK(n.B({1, 1}) == kE * Scalar(-2));
  CHECK(g.C().at({1, 1}) == kE * Scalar(-2));
  auto [n2, g2] = normalize_fock_schwinger(n);
  CHECK(n2 == n);
  CHECK(g2.is_identity());

  Rng rng(44);
  for (int t = 0; t < 30; ++t) {
    BigradedSpace s = random_delta(rng, {6, -5, 5}).space;
    EquivariantConnection c = random_connection(rng, s);
    auto [nc, gc] = normalize_fock_schwinger(c);
    CHECK(is_fock_schwinger(nc));
    CHECK(apply_gauge(c, gc) == nc);
    CHECK(normalize_fock_schwinger(nc).first == nc);
    CHECK(normalize_fock_schwinger(apply_gauge(c, random_gauge(rng, s))).first == nc);
  }
}

TEST_CASE("transport along segments and paths") {
  Scalar a(3);
  EquivariantConnection k(kKSpace, {{{1, 1}, kE * a}}, {{{1, 1}, kE * -a}});
  ConnectionForm f = connection_form(k);
  CHECK(transport_segment(connection_form(EquivariantConnection(kKSpace, {}, {})), Point{1, 2}, Point{-3, 0})
            .is_identity());
  Matrix t = transport_segment(f, Point{-1, 0}, Point{0, -1});
  Matrix n = t - Matrix::identity(2);
  CHECK((n == kE * a || n == kE * -a));
  // reverse of the hypotenuse used by the triangle, so 1 + A here
  CHECK(n == kE * a);
  CHECK(transport_segment(f, Point{0, -1}, Point{-1, 0}) * t == Matrix::identity(2));

  // axes: the pullback vanishes
  CHECK(transport_segment(f, Point{0, 0}, Point{0, 5}).is_identity());
  CHECK(transport_segment(f, Point{0, 0}, Point{-2, 0}).is_identity());

  Matrix rect = holonomy_path(f, {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}, Point{0, 0}});
  CHECK(!rect.is_identity());
    bool defect = rect == Matrix::identity(2) + kE * (Scalar(2) * a) || rect == Matrix::identity(2) - kE * (Scalar(2) * a);
  CHECK(defect);

  CHECK_THROWS_AS(holonomy_path(f, {Point{0, 0}}), InputError);
  CHECK_THROWS_AS(holonomy_path(f, {Point{0, 0}, Point{0, 0}}), InputError);

  Rng rng(6);
  for (int tr = 0; tr < 15; ++tr) {
    BigradedSpace s = random_delta(rng, {5, -4, 4}).space;
    ConnectionForm g = connection_form(random_connection(rng, s));
    Point p0{Scalar(1), Scalar::gaussian(1, 2, 1, 1)}, p1{Scalar(-2), Scalar(1)}, p2{Scalar(3), Scalar(-1)};
    Matrix whole = holonomy_path(g, {p0, p1, p2});
    CHECK(whole == transport_segment(g, p1, p2) * transport_segment(g, p0, p1));
    Point mid{(p0[0] + p1[0]) / Scalar(2), (p0[1] + p1[1]) / Scalar(2)};
    CHECK(holonomy_path(g, {p0, mid, p1}) == transport_segment(g, p0, p1));
    CHECK(holonomy_path(g, {p2, p1, p0}) * whole == Matrix::identity(s.dim()));
  }
}

TEST_CASE("orientation pin: triangle holonomy of the Kummer connection") {
  DeltaObject k1 = delta_operator(kummer_mhs(Scalar(1)));
  EquivariantConnection c = connection_from_delta(k1);
  CHECK(c.A({1, 1}) == kE);
  CHECK(triangle_delta(c) == k1.delta);
  CHECK(triangle_delta(c) == Matrix{{1, -1}, {0, 1}});
  CHECK(triangle_delta(EquivariantConnection(kKSpace, {}, {})).is_identity());
  Scalar cc = Scalar::gaussian(-2, 3, 5, 1);
  CHECK(connection_from_delta(delta_operator(kummer_mhs(cc))).A({1, 1}) == kE * cc);
}

TEST_CASE("triangle holonomy recovers delta") {
  DeltaObject t3 = t3_delta(Scalar(2), Scalar::gaussian(1, 1, -1, 3));
  EquivariantConnection c3 = connection_from_delta(t3);
  CHECK(triangle_delta(c3) == t3.delta);
  CHECK(c3 == connection_by_residuals(t3));

  Rng rng(1);
  for (int t = 0; t < 40; ++t) {
    ComplexMHS v = random_mhs(rng, {6, -3, 3});
    DeltaObject d = delta_operator(v);
    EquivariantConnection c = connection_from_delta(d);
    CHECK(is_fock_schwinger(c));
    CHECK(triangle_delta(c) == d.delta);
    CHECK(c == connection_by_residuals(d));
    // z_{p,q}(A) = D_{p,q}
    if (!c.is_zero()) {
      auto tables = universal_tables(std::max(2, spread(d.space)));
      std::vector<Matrix> mats;
      for (const auto& deg : tables->alpha.degrees) mats.push_back(c.A(deg));
      auto comps = log_delta_components(d);
      for (const auto& [pq, z] : tables->z_in_alpha) {
        Matrix want = comps.count(pq) ? comps.at(pq) : Matrix(d.space.dim(), d.space.dim());
        CHECK(substitute(z, mats) == want);
      }
    }
  }
}

TEST_CASE("flat if and only if split") {
  Rng rng(90);
  for (int t = 0; t < 40; ++t) {
    DeltaObject d = random_delta(rng, {6, -4, 4});
    if (t % 3 == 0) d.delta = Matrix::identity(d.space.dim());
    EquivariantConnection c = connection_from_delta(d);
    CHECK(is_flat(c) == d.delta.is_identity());
    for (const auto& [pq, m] : c.A()) CHECK(d.space.strictly_lowering(m));
  }
  DeltaObject split{BigradedSpace({{-1, 0}, {0, 0}, {1, 1}}), Matrix::identity(3)};
  EquivariantConnection c = connection_from_delta(split);
  CHECK(is_flat(c));
  Matrix tri = triangle_delta(c);
  std::vector<Point> sub{Point{0, 0}, Point{0, Scalar::rational(-1, 2)}, Point{0, -1}, Point{-1, 0}, Point{0, 0}};
  CHECK(holonomy_path(connection_form(c), sub) == tri);
}

TEST_CASE("flat sections along the line") {
  CHECK(flat_sections_on_line(EquivariantConnection(kKSpace, {}, {})) ==
        PolyMatrix::constant(Matrix::identity(2)));
  Scalar a(5);
  EquivariantConnection k(kKSpace, {{{1, 1}, kE * a}}, {{{1, 1}, kE * -a}});
  PolyMatrix s = flat_sections_on_line(k);
  CHECK(s.evaluate(Scalar(-1)).is_identity());
  CHECK(s.evaluate(Scalar(0)) == transport_segment(connection_form(k), Point{-1, 0}, Point{0, -1}));
  CHECK(s.max_abs_exponent(0) == 1);

  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    EquivariantConnection c = connection_from_delta(random_delta(rng, {5, -3, 3}));
    PolyMatrix sc = flat_sections_on_line(c);
    CHECK(sc.evaluate(Scalar(-1)).is_identity());
    CHECK(sc.evaluate(Scalar(0)) == transport_segment(connection_form(c), Point{-1, 0}, Point{0, -1}));
    Scalar u = Scalar::rational(t - 4, 3);
    CHECK(is_nilpotent(sc.evaluate(u) - Matrix::identity(c.dim())));
    // dS/du = -w S along the line
    ConnectionForm f = connection_form(c);
    PolyMatrix w = f.P.compose_affine({Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(-1)}) -
                   f.Q.compose_affine({Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(-1)});
    CHECK(sc.derivative(0) == -(w * sc));
  }
}
