#include "hodgeconn/fixtures.hpp"

#include <algorithm>

#include "hodgeconn/errors.hpp"

namespace hodge {

ComplexMHS kummer_mhs(const Scalar& c) {
  Subspace v = Subspace::full(2);
  Filtration w(Direction::Increasing, 2, {{-2, Subspace::span(Matrix{{1, 0}})}, {0, v}});
  Filtration fp(Direction::Decreasing, 2, {{-1, v}, {0, Subspace::span(Matrix{{0, 1}})}});
  Filtration fpp(Direction::Decreasing, 2, {{-1, v}, {0, Subspace::span(Matrix{{c, 1}})}});
  return ComplexMHS{2, w, fp, fpp};
}

DeltaObject t3_delta(const Scalar& a, const Scalar& b) {
  Matrix d = Matrix::identity(3);
  d(0, 1) = a;
  d(1, 2) = b;
  return DeltaObject{BigradedSpace({{-2, -2}, {-1, -1}, {0, 0}}), d};
}

RealMHS real_tate(int n) {
  return RealMHS{1, Filtration::pure(Direction::Increasing, 1, -2 * n), Filtration::pure(Direction::Decreasing, 1, -n)};
}

RealMHS real_kummer(const Scalar& z) {
  Subspace v = Subspace::full(2);
  Filtration w(Direction::Increasing, 2, {{-2, Subspace::span(Matrix{{1, 0}})}, {0, v}});
  Filtration f(Direction::Decreasing, 2, {{-1, v}, {0, Subspace::span(Matrix{{z, 1}})}});
  return RealMHS{2, w, f};
}

Scalar random_scalar(Rng& rng, Field field, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  if (field == Field::Q) return Scalar(d(rng));
  return Scalar(mpq_class(d(rng)), mpq_class(d(rng)));
}

Matrix random_invertible(Rng& rng, std::size_t n, Field field) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(rng, field, 2);
    if (try_inverse(m)) return m;
  }
}

Matrix random_lowering_unipotent(Rng& rng, const BigradedSpace& space, Field field) {
  Matrix g = Matrix::identity(space.dim());
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < space.dim(); ++i)
    for (std::size_t j = 0; j < space.dim(); ++j)
      if (space.label(i).first < space.label(j).first && space.label(i).second < space.label(j).second && coin(rng))
        g(i, j) = random_scalar(rng, field);
  return g;
}

DeltaObject random_delta(Rng& rng, const RandomSpec& spec) {
  std::uniform_int_distribution<std::size_t> dim_dist(1, spec.max_dim);
  std::uniform_int_distribution<int> weight(spec.min_weight, spec.max_weight);
  std::uniform_int_distribution<int> offset(-2, 2);
  std::size_t n = dim_dist(rng);
  std::vector<Bidegree> labels;
  for (std::size_t k = 0; k < n; ++k) {
    int w = weight(rng);
    int p = (w >= 0 ? w / 2 : -((1 - w) / 2)) + offset(rng);
    labels.emplace_back(p, w - p);
  }
  std::sort(labels.begin(), labels.end(), canonical_less);
  BigradedSpace space(labels);
  return DeltaObject{space, random_lowering_unipotent(rng, space, spec.field)};
}

ComplexMHS random_mhs(Rng& rng, const RandomSpec& spec) {
  DeltaObject d = random_delta(rng, spec);
  ComplexMHS v = delta_to_mhs(d, false);
  return transform_mhs(v, random_invertible(rng, v.dim, spec.field));
}

ComplexMHS corrupt_mhs(Rng& rng, const ComplexMHS& v) {
  if (v.dim == 0) throw InputError("cannot corrupt the zero structure");
  ComplexMHS out = v;
  bool use_fp = std::bernoulli_distribution(0.5)(rng);
  Filtration& f = use_fp ? out.Fp : out.Fpp;
  std::vector<int> candidates;
  for (const auto& [p, s] : f.jumps())
    if (f.graded_dim(p) > 0) candidates.push_back(p);
  int p = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
  Subspace next = f.at(p + 1);
  Subspace step = f.at(p);
  // keep all but one of the basis vectors of F^p that are new relative to F^{p+1}
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < next.dim(); ++r) rows.push_back(next.basis().row_vector(r));
  std::vector<Vector> extra;
  Subspace acc = next;
  for (std::size_t r = 0; r < step.dim(); ++r) {
    Vector row = step.basis().row_vector(r);
    if (acc.contains(row)) continue;
    extra.push_back(row);
    acc = acc + Subspace::span(Matrix::from_rows({row}, v.dim));
  }
  std::size_t drop = std::uniform_int_distribution<std::size_t>(0, extra.size() - 1)(rng);
  for (std::size_t k = 0; k < extra.size(); ++k)
    if (k != drop) rows.push_back(extra[k]);
  std::map<int, Subspace> steps(f.jumps().begin(), f.jumps().end());
  steps[p] = Subspace::span(rows, v.dim);
  f = Filtration(f.direction(), v.dim, steps);
  return out;
}

}  // namespace hodge
