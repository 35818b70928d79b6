#include <random>

#include "doctest.h"
#include "hodgeconn/errors.hpp"
#include "hodgeconn/polynomial.hpp"
#include "hodgeconn/subspace.hpp"

using namespace hodge;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, bool gaussian = false) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = gaussian ? Scalar(mpq_class(d(rng)), mpq_class(d(rng))) : Scalar(d(rng));
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic and round trip") {
  Scalar a = Scalar::gaussian(1, 2, -3, 4);
  CHECK(a.str() == "1/2-3/4*i");
  CHECK(Scalar::parse(a.str()) == a);
  CHECK(Scalar::parse("i") * Scalar::parse("i") == Scalar(-1));
  CHECK(Scalar::parse("-i") == -Scalar::i());
  CHECK(Scalar::parse("3*i") == Scalar(mpq_class(0), mpq_class(3)));
  CHECK(Scalar::parse("7") .str() == "7");
  CHECK(a * a.inverse() == Scalar(1));
  CHECK((a * a.conj()).is_real());
  CHECK_THROWS_AS(Scalar(0).inverse(), MathViolation);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
}

TEST_CASE("scalar parse round trip over random values") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-50, 50), den(1, 9);
  for (int k = 0; k < 200; ++k) {
    Scalar s(mpq_class(d(rng), den(rng)), mpq_class(d(rng), den(rng)));
    CHECK(Scalar::parse(s.str()) == s);
  }
}

TEST_CASE("matrix inverse and kernel") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    bool g = trial % 2 == 1;
    Matrix m = random_matrix(rng, 4, 4, g);
    if (auto inv = try_inverse(m)) {
      CHECK((m * *inv).is_identity());
      CHECK((*inv * m).is_identity());
    } else {
      CHECK(rank(m) < 4);
    }
    Matrix k = kernel(m);
    CHECK(k.rows() + rank(m) == 4);
    for (std::size_t r = 0; r < k.rows(); ++r) {
      Vector v = m * k.row_vector(r);
      for (const auto& x : v) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("unipotent exp and log are inverse") {
  Matrix n{{0, 1, 2}, {0, 0, 3}, {0, 0, 0}};
  Matrix u = exp_nilpotent(n);
  CHECK(log_unipotent(u) == n);
  CHECK((u * inverse_unipotent(u)).is_identity());
  CHECK(is_nilpotent(n));
  CHECK_FALSE(is_nilpotent(Matrix::identity(2)));
  CHECK_THROWS_AS(exp_nilpotent(Matrix::identity(2)), NotNilpotent);
}

TEST_CASE("subspace sum and intersection satisfy the dimension formula") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 5;
    Subspace a = Subspace::span(random_matrix(rng, 1 + trial % 3, n, trial % 4 == 0));
    Subspace b = Subspace::span(random_matrix(rng, 1 + (trial / 3) % 3, n));
    Subspace s = a + b, i = a & b;
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK((a & a) == a);
    CHECK((b & a) == i);
    // annihilator of the annihilator is the original space
    CHECK(a.annihilator().annihilator() == a);
    CHECK(a.annihilator().dim() + a.dim() == n);
  }
}

TEST_CASE("quotient chart round trip") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix gens = random_matrix(rng, 4, 6);
    Subspace whole = Subspace::span(gens);
    Subspace sub = Subspace::span(Matrix::from_rows({gens.row_vector(0)}, 6));
    QuotientChart q(whole, sub);
    CHECK(q.dim() + sub.dim() == whole.dim());
    for (std::size_t r = 0; r < gens.rows(); ++r) {
      Vector v = gens.row_vector(r);
      Vector back = q.lift(q.coords(v));
      Vector diff(6);
      for (std::size_t j = 0; j < 6; ++j) diff[j] = v[j] - back[j];
      CHECK(sub.contains(diff));
    }
    CHECK(q.project(sub).dim() == 0);
    CHECK(q.project(whole).dim() == q.dim());
  }
}

TEST_CASE("tensor of subspaces has product dimension") {
  Subspace a = Subspace::span(Matrix{{1, 1, 0}});
  Subspace b = Subspace::span(Matrix{{1, 0}, {0, 1}});
  Subspace t = tensor(a, b);
  CHECK(t.dim() == 2);
  CHECK(t.ambient() == 6);
  Vector v{1, 0, 1, 0, 0, 0};
  CHECK(t.contains(v));
}

TEST_CASE("polynomial matrices") {
  Matrix e = Matrix::unit(2, 0, 1);
  PolyMatrix p = PolyMatrix::monomial(e, {2, 1});
  PolyMatrix q = PolyMatrix::monomial(Matrix::unit(2, 1, 0), {0, 1});
  PolyMatrix pq = p * q;
  CHECK(pq.coefficient({2, 2}) == Matrix::unit(2, 0, 0));
  CHECK(p.derivative(0).coefficient({1, 1}) == e * Scalar(2));
  CHECK(p.derivative(1).coefficient({2, 0}) == e);
  CHECK(p.evaluate(Scalar(2), Scalar(3)) == e * Scalar(12));

  // along (x, y) = (1 + t, -t): x^2 y = -t - 2t^2 - t^3
  PolyMatrix line = p.compose_affine({Scalar(1), Scalar(0)}, {Scalar(1), Scalar(-1)});
  CHECK(line.coefficient({1, 0}) == e * Scalar(-1));
  CHECK(line.coefficient({2, 0}) == e * Scalar(-2));
  CHECK(line.coefficient({3, 0}) == e * Scalar(-1));
  // int_0^1 of -t - 2t^2 - t^3 = -1/2 - 2/3 - 1/4
  CHECK(integrate_poly_segment(line, Scalar(0), Scalar(1)) == e * Scalar::rational(-17, 12));
  PolyMatrix anti = line.antiderivative(Scalar(-1));
  CHECK(anti.evaluate(Scalar(-1)).is_zero());
  CHECK(anti.derivative(0) == line);
  CHECK_THROWS_AS(PolyMatrix::monomial(e, {-1, 0}), DimensionMismatch);
  PolyMatrix lp = PolyMatrix::monomial(e, {-1, 2}, true);
  CHECK(lp.evaluate(Scalar(2), Scalar(1)) == e * Scalar::rational(1, 2));
}

TEST_CASE("small worked examples") {
  Subspace a = Subspace::span(Matrix{{1, 1, 0}});
  Subspace b = Subspace::span(Matrix{{1, -1, 0}});
  CHECK((a + b) == Subspace::span(Matrix{{1, 0, 0}, {0, 1, 0}}));
  CHECK((a + a) == a);
  Subspace c = Subspace::span(Matrix{{1, 1, 0}, {0, 1, 0}});
  Subspace d = Subspace::span(Matrix{{0, 1, 0}, {0, 0, 1}});
  CHECK((c & d) == Subspace::span(Matrix{{0, 1, 0}}));
  CHECK((c & Subspace::zero(3)).is_zero());
  CHECK((Subspace::span(Matrix{{1, 1}}) & Subspace::span(Matrix{{1, 0}})).is_zero());
  CHECK_THROWS_AS(a + Subspace::full(2), DimensionMismatch);

  std::vector<Subspace> steps{Subspace::full(2), Subspace::span(Matrix{{1, 1}}), Subspace::zero(2)};
  auto induced = induced_filtration_on_quotient(steps, Subspace::full(2), Subspace::span(Matrix{{0, 1}}));
  REQUIRE(induced.size() == 3);
  CHECK(induced[1].dim() == 1);
  CHECK(induced[1].ambient() == 1);
  CHECK(induced[2].dim() == 0);
  auto collapsed = induced_filtration_on_quotient(steps, Subspace::full(2), Subspace::full(2));
  for (const auto& s : collapsed) CHECK(s.ambient() == 0);
  CHECK_THROWS_AS(
      induced_filtration_on_quotient(steps, Subspace::span(Matrix{{1, 0}}), Subspace::span(Matrix{{0, 1}})),
      DimensionMismatch);

  CHECK(log_unipotent(Matrix::identity(3)).is_zero());
  Matrix sq{{1, 0}, {Scalar::gaussian(2, 3, 1, 1), 1}};
  CHECK(log_unipotent(sq) == Matrix{{0, 0}, {Scalar::gaussian(2, 3, 1, 1), 0}});
  Matrix j{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  CHECK(exp_nilpotent(log_unipotent(j)) == j);
  CHECK_THROWS_AS(log_unipotent(Matrix{{2, 0}, {0, 1}}), NotNilpotent);

  Matrix one = Matrix::identity(1);
  CHECK(integrate_poly_segment(PolyMatrix::constant(one), Scalar(-1), Scalar(0)) == one);
  CHECK(integrate_poly_segment(PolyMatrix::monomial(-one, {1, 0}), Scalar(-1), Scalar(0)) ==
        one * Scalar::rational(1, 2));
  CHECK(integrate_poly_segment(PolyMatrix::constant(-one), Scalar(-1), Scalar(0)) == -one);
}

TEST_CASE("random unipotent matrices: exp of log is the identity map") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 1 + trial % 8;
    Matrix u = Matrix::identity(n);
    Matrix r = random_matrix(rng, n, n, trial % 3 == 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k) u(i, k) = r(i, k);
    Matrix p = random_matrix(rng, n, n);
    if (auto pinv = try_inverse(p)) u = *pinv * u * p;
    CHECK(exp_nilpotent(log_unipotent(u)) == u);
  }
}

TEST_CASE("integration is additive over intervals") {
  PolyMatrix p = PolyMatrix::monomial(Matrix{{1, 2}}, {3, 0}) + PolyMatrix::constant(Matrix{{Scalar::i(), 0}});
  Scalar a(-2), m = Scalar::rational(1, 3), b(5);
  CHECK(integrate_poly_segment(p, a, m) + integrate_poly_segment(p, m, b) == integrate_poly_segment(p, a, b));
}
