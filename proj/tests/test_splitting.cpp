#include "doctest.h"
#include "hodgeconn/errors.hpp"
#include "hodgeconn/fixtures.hpp"
#include "hodgeconn/splitting.hpp"

using namespace hodge;

namespace {

const Scalar kC = Scalar::gaussian(-3, 2, 1, 1);

// The three defining properties of a Deligne splitting, checked directly.
void check_contracts(const ComplexMHS& v) {
  Bigrading a = deligne_splitting(v, Side::Fp);
  Bigrading b = deligne_splitting(v, Side::Fpp);
  REQUIRE(a.is_direct());
  REQUIRE(b.is_direct());
  for (int n = v.W.min_index() - 1; n <= v.W.max_index() + 1; ++n) {
    CHECK(a.sum_where([n](const Bidegree& l) { return l.first + l.second <= n; }) == v.W.at(n));
    CHECK(b.sum_where([n](const Bidegree& l) { return l.first + l.second <= n; }) == v.W.at(n));
  }
  for (int p = v.Fp.min_index() - 1; p <= v.Fp.max_index() + 1; ++p)
    CHECK(a.sum_where([p](const Bidegree& l) { return l.first >= p; }) == v.Fp.at(p));
  for (int q = v.Fpp.min_index() - 1; q <= v.Fpp.max_index() + 1; ++q)
    CHECK(b.sum_where([q](const Bidegree& l) { return l.second >= q; }) == v.Fpp.at(q));
  for (const auto& [pq, s] : a.pieces) {
    Subspace lower = v.W.at(pq.first + pq.second - 1);
    CHECK((s + lower) == (b.pieces.at(pq) + lower));
  }
}

}  // namespace

TEST_CASE("splittings of pure and Kummer structures") {
  Bigrading p = deligne_splitting(pure_mhs(2, 3), Side::Fp);
  CHECK(p.pieces.size() == 1);
  CHECK(p.pieces.at({2, 3}).is_full());

  ComplexMHS k = kummer_mhs(kC);
  Bigrading a = deligne_splitting(k, Side::Fp);
  CHECK(a.pieces.at({0, 0}) == Subspace::span(Matrix{{0, 1}}));
  CHECK(a.pieces.at({-1, -1}) == Subspace::span(Matrix{{1, 0}}));
  Bigrading b = deligne_splitting(k, Side::Fpp);
  CHECK(b.pieces.at({0, 0}) == Subspace::span(Matrix{{kC, 1}}));
  CHECK(b.pieces.at({-1, -1}) == Subspace::span(Matrix{{1, 0}}));
  check_contracts(k);
}

TEST_CASE("splitting contracts on random structures") {
  Rng rng(2024);
  for (int t = 0; t < 60; ++t) check_contracts(random_mhs(rng, {}));
}

TEST_CASE("delta of the Kummer structure") {
  DeltaObject d = delta_operator(kummer_mhs(kC));
  CHECK(d.space.labels() == std::vector<Bidegree>{{-1, -1}, {0, 0}});
  // columns are images: delta(e_0) = e_0 - c e_{-1}
  CHECK(d.delta == Matrix{{1, -kC}, {0, 1}});
  CHECK(delta_operator(pure_mhs(1, 1)).delta.is_identity());
  CHECK(delta_operator(direct_sum_mhs(pure_mhs(1, 1), pure_mhs(0, 2))).delta.is_identity());
}

TEST_CASE("delta is compatible with tensor products") {
  // basis-free form: L' L''^{-1} on V is the tensor product of the factors'
  Rng rng(8);
  auto transfer = [](const ComplexMHS& v) {
    DeligneData d = deligne_data(v);
    return d.lift_Fp * inverse(d.lift_Fpp);
  };
  ComplexMHS k1 = kummer_mhs(kC), k2 = kummer_mhs(Scalar(5));
  CHECK(transfer(tensor_mhs(k1, k2)) == kron(transfer(k1), transfer(k2)));
  for (int t = 0; t < 10; ++t) {
    RandomSpec small{3, -3, 3, Field::Qi};
    ComplexMHS a = random_mhs(rng, small), b = random_mhs(rng, small);
    CHECK(transfer(tensor_mhs(a, b)) == kron(transfer(a), transfer(b)));
  }
  // in the canonical gr basis for K(c) (x) K(c'): components of delta
  DeltaObject d = delta_operator(tensor_mhs(k1, k2));
  CHECK(d.space.hodge() == HodgeNumbers{{{-2, -2}, 1}, {{-1, -1}, 2}, {{0, 0}, 1}});
  CHECK(log_delta_components(d).size() == 1);
}

TEST_CASE("log delta components") {
  CHECK(log_delta_components(delta_operator(pure_mhs(0, 0))).empty());
  auto kd = log_delta_components(delta_operator(kummer_mhs(kC)));
  REQUIRE(kd.size() == 1);
  CHECK(kd.at({1, 1}) == Matrix{{0, -kC}, {0, 0}});

  Scalar a(3), b = Scalar::gaussian(1, 2, 1, 1);
  auto td = log_delta_components(t3_delta(a, b));
  REQUIRE(td.size() == 2);
  CHECK(td.at({1, 1}) == Matrix{{0, a, 0}, {0, 0, b}, {0, 0, 0}});
  CHECK(td.at({2, 2}) == Matrix{{0, 0, -(a * b) / Scalar(2)}, {0, 0, 0}, {0, 0, 0}});

  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    DeltaObject d = random_delta(rng, {});
    Matrix sum(d.space.dim(), d.space.dim());
    for (const auto& [pq, m] : log_delta_components(d)) {
      CHECK(d.space.has_bidegree(m, pq.first, pq.second));
      sum += m;
    }
    CHECK(exp_nilpotent(sum) == d.delta);
  }
}

TEST_CASE("delta objects reject non-lowering operators") {
  DeltaObject d = t3_delta(Scalar(1), Scalar(1));
  d.delta(2, 0) = 1;
  CHECK_THROWS_AS(validate_delta(d), MathViolation);
  DeltaObject same_p{BigradedSpace({{0, -1}, {0, 0}}), Matrix{{1, 1}, {0, 1}}};
  CHECK_THROWS_AS(validate_delta(same_p), MathViolation);
}

TEST_CASE("delta_to_mhs inverts delta_operator") {
  CHECK(delta_to_mhs(DeltaObject{BigradedSpace({{0, 0}}), Matrix::identity(1)}) == pure_mhs(0, 0));
  ComplexMHS k = kummer_mhs(kC);
  CHECK(delta_to_mhs(delta_operator(k)) == k);
  ComplexMHS t = delta_to_mhs(t3_delta(Scalar(2), Scalar(-7)));
  CHECK(delta_operator(t) == t3_delta(Scalar(2), Scalar(-7)));

  Rng rng(77);
  for (int t = 0; t < 40; ++t) {
    DeltaObject d = random_delta(rng, {});
    CHECK(delta_operator(delta_to_mhs(d)) == d);
    // the other direction: projection along the F' splitting is an
    // isomorphism of structures that induces the identity on gr
    ComplexMHS v = random_mhs(rng, {});
    DeligneData data = deligne_data(v);
    ComplexMHS model = delta_to_mhs(DeltaObject{data.gr, data.delta});
    Matrix a = inverse(data.lift_Fp);
    CHECK(validate_morphism(a, v, model));
    CHECK(validate_morphism(data.lift_Fp, model, v));
  }
}

TEST_CASE("conjugate delta agrees with conjugating the structure") {
  DeltaObject pd{BigradedSpace({{-1, 2}}), Matrix::identity(1)};
  CHECK(conjugate_delta(pd) == DeltaObject{BigradedSpace({{2, -1}}), Matrix::identity(1)});
  DeltaObject kd = delta_operator(kummer_mhs(kC));
  DeltaObject ck = conjugate_delta(kd);
  CHECK(ck.delta == Matrix{{1, kC.conj()}, {0, 1}});
  CHECK(ck == delta_operator(conjugate_mhs(kummer_mhs(kC))));
  CHECK(conjugate_delta(ck) == kd);

  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    DeltaObject d = random_delta(rng, {});
    DeltaObject c = conjugate_delta(d);
    CHECK(c == delta_operator(conjugate_mhs(delta_to_mhs(d))));
    CHECK(conjugate_delta(c) == d);
  }
}
