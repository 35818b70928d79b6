#pragma once

#include <optional>
#include <vector>

#include "hodgeconn/mhs.hpp"
#include "hodgeconn/polynomial.hpp"
#include "hodgeconn/splitting.hpp"

namespace hodge {

/// Phi(xi0, xi1) = phi^{-1} delta phi with phi(v_{p,q}) = xi0^{p+q} xi1^{-p} v_{p,q};
/// variable 0 is xi0 and variable 1 is xi1.
PolyMatrix rees_patching(const DeltaObject& d);

/// Restriction of Phi to the line xi0 = -t2 - t1 xi1, as a Laurent matrix in
/// xi1 (stored as variable 0). T = (0, 0) is the weight line.
PolyMatrix restrict_to_line(const PolyMatrix& phi, const Scalar& t1, const Scalar& t2);

/// Sections over the chart at 0 are polynomial vectors f(xi); a section of
/// E(k) is one where xi^{-k} G f has no positive powers of xi. With this
/// convention G = xi^{-1} is O(1).
std::size_t h0(const PolyMatrix& g, int k);

/// Grothendieck splitting type, sorted descending. Throws MathViolation when
/// det G is not a monomial or when the degree sum disagrees with det G.
std::vector<int> splitting_type(const PolyMatrix& g);

/// det G for a Laurent matrix in one variable, as (coefficient, exponent) if
/// it is a monomial.
std::optional<std::pair<Scalar, int>> monomial_determinant(const PolyMatrix& g);

/// Type of the Rees bundle of two decreasing filtrations on one space:
/// p + q repeated dim gr^p_{F'} gr^q_{F''} times, sorted descending.
std::vector<int> two_filtration_rees_type(const Filtration& fp, const Filtration& fpp);

/// Transition matrix on the weight line of the Rees bundle of any triple
/// (W, F', F''): diagonal with xi^{-(p+q-n)} per graded piece (n, p, q).
/// For a mixed Hodge structure it is the identity.
PolyMatrix weight_line_transition(const ComplexMHS& triple);

}  // namespace hodge
