#pragma once

#include <array>
#include <vector>

#include "hodgeconn/connection.hpp"

namespace hodge {

using Point = std::array<Scalar, 2>;

/// Transport T(a -> b) along the straight segment for ds + Omega s = 0,
/// i.e. dT/dtau = -Omega(gamma') T with T(0) = 1. Throws NotNilpotent when
/// the Picard series does not terminate within dim + 1 steps.
Matrix transport_segment(const ConnectionForm& omega, const Point& a, const Point& b);

/// T_last ... T_first for the consecutive segments of the path. Throws
/// InputError for fewer than two points or repeated consecutive points.
Matrix holonomy_path(const ConnectionForm& omega, const std::vector<Point>& path);

/// The closed triangle (0,0) -> (0,-1) -> (-1,0) -> (0,0).
std::vector<Point> triangle_path();

/// Holonomy around triangle_path().
Matrix triangle_delta(const EquivariantConnection& c);

/// S(u) with dS/du = -Omega(gamma'(u)) S along gamma(u) = (u, -1-u) and
/// S(-1) = 1, as a polynomial in u (variable 0).
PolyMatrix flat_sections_on_line(const EquivariantConnection& c);

}  // namespace hodge
