#include "doctest.h"
#include "hodgeconn/errors.hpp"
#include "hodgeconn/fixtures.hpp"
#include "hodgeconn/rees.hpp"

using namespace hodge;

namespace {

PolyMatrix laurent(std::initializer_list<std::tuple<std::size_t, std::size_t, int, Scalar>> entries, std::size_t r) {
  PolyMatrix g(r, r, true);
  for (const auto& [i, j, e, v] : entries) g.add_term({e, 0}, Matrix::unit(r, i, j, v));
  return g;
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

TEST_CASE("patching function") {
  Scalar c = Scalar::gaussian(1, 1, 2, 1);
  DeltaObject kd = delta_operator(kummer_mhs(c));
  PolyMatrix phi = rees_patching(kd);
  CHECK(phi.coefficient({0, 0}) == Matrix::identity(2));
  CHECK(phi.coefficient({2, -1}) == Matrix::unit(2, 0, 1, -c));
  CHECK(phi.terms().size() == 2);
  CHECK(rees_patching(DeltaObject{BigradedSpace({{0, 1}, {1, 0}}), Matrix::identity(2)}) ==
        PolyMatrix::constant(Matrix::identity(2), true));

  Rng rng(10);
  for (int t = 0; t < 30; ++t) {
    DeltaObject d = random_delta(rng, {});
    CHECK(rees_patching(d).evaluate(Scalar(1), Scalar(1)) == d.delta);
  }
}

TEST_CASE("restriction to lines") {
  Scalar c(3);
  PolyMatrix phi = rees_patching(delta_operator(kummer_mhs(c)));
  CHECK(restrict_to_line(phi, Scalar(0), Scalar(0)) == PolyMatrix::constant(Matrix::identity(2), true));
  // xi0 = xi1 on T = (-1, 0): -c xi^2 xi^{-1}
  PolyMatrix l = restrict_to_line(phi, Scalar(-1), Scalar(0));
  CHECK(l.coefficient({1, 0}) == Matrix::unit(2, 0, 1, -c));
  // T = (1, 1): xi0 = -1 - xi: -c (1 + xi)^2 / xi
  PolyMatrix l2 = restrict_to_line(phi, Scalar(1), Scalar(1));
  CHECK(l2.coefficient({-1, 0}) == Matrix::unit(2, 0, 1, -c));
  CHECK(l2.coefficient({0, 0}) == Matrix::identity(2) + Matrix::unit(2, 0, 1, Scalar(-2) * c));
  CHECK(l2.coefficient({1, 0}) == Matrix::unit(2, 0, 1, -c));
}

TEST_CASE("splitting types of explicit transition matrices") {
  CHECK(splitting_type(PolyMatrix::constant(Matrix::identity(2), true)) == std::vector<int>{0, 0});
  PolyMatrix o1 = laurent({{0, 0, -1, Scalar(1)}}, 1);
  CHECK(h0(o1, 0) == 2);
  CHECK(splitting_type(o1) == std::vector<int>{1});
  CHECK(splitting_type(laurent({{0, 0, 2, Scalar(1)}}, 1)) == std::vector<int>{-2});
  // diag(xi^{-3}, xi^{1}, xi^0)
  PolyMatrix diag = laurent({{0, 0, -3, Scalar(1)}, {1, 1, 1, Scalar(5)}, {2, 2, 0, Scalar(1)}}, 3);
  CHECK(splitting_type(diag) == std::vector<int>{3, 0, -1});
  // a non-diagonal representative of O(1) + O(-1): (xi^{-1}, 1; 0, xi)
  PolyMatrix tri = laurent({{0, 0, -1, Scalar(1)}, {0, 1, 0, Scalar(1)}, {1, 1, 1, Scalar(1)}}, 2);
  CHECK(splitting_type(tri) == std::vector<int>{1, -1});
  // (xi, 1; 0, xi^{-1}) is trivial: the off-diagonal entry glues O(-1) and O(1)
  PolyMatrix glued = laurent({{0, 0, 1, Scalar(1)}, {0, 1, 0, Scalar(1)}, {1, 1, -1, Scalar(1)}}, 2);
  CHECK(splitting_type(glued) == std::vector<int>{0, 0});
  PolyMatrix bad = laurent({{0, 0, 0, Scalar(1)}, {0, 0, 1, Scalar(1)}}, 1);
  CHECK_THROWS_AS(splitting_type(bad), MathViolation);
}

TEST_CASE("h0 is nondecreasing and eventually grows by the rank") {
  PolyMatrix diag = laurent({{0, 0, -2, Scalar(1)}, {1, 1, 1, Scalar(1)}}, 2);
  long prev = 0;
  for (int k = -4; k <= 6; ++k) {
    long h = static_cast<long>(h0(diag, k));
    CHECK(h >= prev);
    // oracle: a = (2, -1)
    CHECK(h == std::max(0, 2 + k + 1) + std::max(0, -1 + k + 1));
    prev = h;
  }
}

TEST_CASE("Rees bundles of mixed Hodge structures are trivial on lines") {
  Rng rng(55);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int t = 0; t < 15; ++t) {
    DeltaObject d = random_delta(rng, {5, -4, 4});
    PolyMatrix phi = rees_patching(d);
    std::vector<int> zeros(d.space.dim(), 0);
    CHECK(splitting_type(restrict_to_line(phi, Scalar(0), Scalar(0))) == zeros);
    for (int s = 0; s < 3; ++s) {
      Scalar t1(mpq_class(coord(rng)), mpq_class(coord(rng))), t2(coord(rng));
      CHECK(splitting_type(restrict_to_line(phi, t1, t2)) == zeros);
    }
  }
  Scalar c(7);
  PolyMatrix phi = rees_patching(delta_operator(kummer_mhs(c)));
  CHECK(splitting_type(restrict_to_line(phi, Scalar(2), Scalar(-3))) == std::vector<int>{0, 0});
}

TEST_CASE("two-filtration Rees types") {
  ComplexMHS p = pure_mhs(2, -5);
  CHECK(two_filtration_rees_type(p.Fp, p.Fpp) == std::vector<int>{-3});
  // pure weight 3 of rank 3
  DeltaObject pure{BigradedSpace({{0, 3}, {1, 2}, {3, 0}}), Matrix::identity(3)};
  ComplexMHS v = transform_mhs(delta_to_mhs(pure), Matrix{{1, 2, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(two_filtration_rees_type(v.Fp, v.Fpp) == std::vector<int>{3, 3, 3});
  // F' and F'' with the same jump line: not opposite
  Subspace l = Subspace::span(Matrix{{1, 0}});
  Filtration f(Direction::Decreasing, 2, {{0, Subspace::full(2)}, {1, l}});
  CHECK(two_filtration_rees_type(f, f) == std::vector<int>{2, 0});
}

TEST_CASE("weight line type detects non-Hodge triples") {
  CHECK(splitting_type(weight_line_transition(kummer_mhs(Scalar(2)))) == std::vector<int>{0, 0});
  ComplexMHS bad = kummer_mhs(Scalar(2));
  bad.W = Filtration(Direction::Increasing, 2, {{-2, Subspace::span(Matrix{{0, 1}})}, {0, Subspace::full(2)}});
  std::vector<int> type = splitting_type(weight_line_transition(bad));
  CHECK(type != std::vector<int>{0, 0});
  GradedPieces pieces = graded_pieces(bad);
  std::vector<int> expected;
  for (const auto& [npq, d] : pieces) expected.insert(expected.end(), d, npq[1] + npq[2] - npq[0]);
  CHECK(type == sorted_desc(expected));

  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    ComplexMHS v = random_mhs(rng, {});
    CHECK(splitting_type(weight_line_transition(v)) == std::vector<int>(v.dim, 0));
    ComplexMHS w = corrupt_mhs(rng, v);
    std::vector<int> ty = splitting_type(weight_line_transition(w));
    CHECK(ty != std::vector<int>(v.dim, 0));
  }
}
