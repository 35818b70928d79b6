#include "hodgeconn/holonomy.hpp"

#include "hodgeconn/errors.hpp"

namespace hodge {

namespace {

// Pullback of Omega along base + u dir, as the du coefficient.
PolyMatrix pullback(const ConnectionForm& omega, const Point& base, const Point& dir) {
  PolyMatrix p = omega.P.compose_affine(base, dir);
  PolyMatrix q = omega.Q.compose_affine(base, dir);
  return dir[0] * p + dir[1] * q;
}

// Fundamental solution of dS/du = -w(u) S with S(lower) = 1.
PolyMatrix picard(const PolyMatrix& w, const Scalar& lower) {
  const std::size_t n = w.rows();
  PolyMatrix sum = PolyMatrix::constant(Matrix::identity(n));
  PolyMatrix term = sum;
  for (std::size_t k = 1;; ++k) {
    term = -(w * term).antiderivative(lower);
    if (term.is_zero()) return sum;
    if (k > n) throw NotNilpotent("path-ordered exponential does not terminate");
    sum += term;
  }
}

}  // namespace

Matrix transport_segment(const ConnectionForm& omega, const Point& a, const Point& b) {
  Point dir{b[0] - a[0], b[1] - a[1]};
  return picard(pullback(omega, a, dir), Scalar(0)).evaluate(Scalar(1));
}

Matrix holonomy_path(const ConnectionForm& omega, const std::vector<Point>& path) {
  if (path.size() < 2) throw InputError("a path needs at least two points");
  Matrix h = Matrix::identity(omega.P.rows());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i] == path[i + 1]) throw InputError("consecutive path points must differ");
    h = transport_segment(omega, path[i], path[i + 1]) * h;
  }
  return h;
}

std::vector<Point> triangle_path() {
  return {Point{0, 0}, Point{0, -1}, Point{-1, 0}, Point{0, 0}};
}

Matrix triangle_delta(const EquivariantConnection& c) {
  return holonomy_path(connection_form(c), triangle_path());
}

PolyMatrix flat_sections_on_line(const EquivariantConnection& c) {
  return picard(pullback(connection_form(c), Point{0, -1}, Point{1, -1}), Scalar(-1));
}

}  // namespace hodge
