#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hodgeconn/filtration.hpp"

namespace hodge {

/// Complex mixed Hodge structure on K^n: W increasing, F' and F'' decreasing.
struct ComplexMHS {
  std::size_t dim = 0;
  Filtration W;
  Filtration Fp;
  Filtration Fpp;

  friend bool operator==(const ComplexMHS&, const ComplexMHS&) = default;
};

/// Real mixed Hodge structure: W over Q, F over Q(i); F'' is the conjugate
/// of F.
struct RealMHS {
  std::size_t dim = 0;
  Filtration W;
  Filtration F;

  friend bool operator==(const RealMHS&, const RealMHS&) = default;
};

/// h^{p,q}, keyed by (p, q). Zero entries are not stored.
using HodgeNumbers = std::map<std::pair<int, int>, std::size_t>;

/// dim gr^p_{F'} gr^q_{F''} gr^W_n for every nonzero piece, keyed (n, p, q).
using GradedPieces = std::map<std::array<int, 3>, std::size_t>;

struct MHSViolation {
  int n = 0;
  int p = 0;
  int q = 0;
  std::size_t dim = 0;
  std::string str() const;
};

struct MHSCheck {
  HodgeNumbers hodge;
  std::optional<MHSViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

GradedPieces graded_pieces(const ComplexMHS& v);
/// Hodge numbers, or the first forbidden piece in (n, p, q) order.
/// Throws DimensionMismatch when the filtrations live on different spaces.
MHSCheck check_mhs(const ComplexMHS& v);
/// Throws MathViolation describing the first violation.
HodgeNumbers validate_mhs(const ComplexMHS& v);

ComplexMHS conjugate_mhs(const ComplexMHS& v);
/// Throws InputError when W is not rational and MathViolation when the
/// complexification is not a mixed Hodge structure.
ComplexMHS realize_real(const RealMHS& v);
ComplexMHS tensor_mhs(const ComplexMHS& a, const ComplexMHS& b);
ComplexMHS dual_mhs(const ComplexMHS& v);
ComplexMHS direct_sum_mhs(const ComplexMHS& a, const ComplexMHS& b);
/// Structure transported along an invertible g: steps map to g(step).
ComplexMHS transform_mhs(const ComplexMHS& v, const Matrix& g);
/// True iff f (an n' x n matrix) preserves W, F' and F''.
bool validate_morphism(const Matrix& f, const ComplexMHS& source, const ComplexMHS& target);

/// The one-dimensional pure structure of type (p, q).
ComplexMHS pure_mhs(int p, int q);

std::size_t total(const HodgeNumbers& h);

}  // namespace hodge
