#pragma once

#include <map>

#include "hodgeconn/bigraded.hpp"
#include "hodgeconn/mhs.hpp"

namespace hodge {

/// Pieces V^{p,q} of a splitting of K^n.
struct Bigrading {
  std::size_t ambient = 0;
  std::map<Bidegree, Subspace> pieces;

  /// Dimensions add up to n and the sum of all pieces is everything.
  bool is_direct() const;
  /// Sum of the pieces whose label satisfies pred.
  template <class Pred>
  Subspace sum_where(Pred pred) const {
    Subspace s = Subspace::zero(ambient);
    for (const auto& [pq, piece] : pieces)
      if (pred(pq)) s = s + piece;
    return s;
  }
};

/// A bigraded space with a unipotent operator delta such that delta - 1
/// strictly lowers both degrees.
struct DeltaObject {
  BigradedSpace space;
  Matrix delta;

  friend bool operator==(const DeltaObject&, const DeltaObject&) = default;
};

/// Throws MathViolation when delta - 1 is not strictly lowering and
/// DimensionMismatch on a shape error.
void validate_delta(const DeltaObject& d);

enum class Side { Fp, Fpp };

Bigrading deligne_splitting(const ComplexMHS& v, Side side);

/// Everything computed on the way to delta.
///
/// Columns of lift_Fp (lift_Fpp) are the canonical gr basis vectors lifted
/// into the F' (F'') splitting, so lift_Fp^{-1} is the projection of V onto
/// gr along the F' splitting.
struct DeligneData {
  HodgeNumbers hodge;
  BigradedSpace gr;
  Bigrading split_Fp;
  Bigrading split_Fpp;
  Matrix lift_Fp;
  Matrix lift_Fpp;
  Matrix delta;
};

/// Throws MathViolation when v is not a mixed Hodge structure.
DeligneData deligne_data(const ComplexMHS& v);
DeltaObject delta_operator(const ComplexMHS& v);

/// Blocks D_{p,q} of D = log delta, keyed by (p, q); zero blocks are omitted.
std::map<Bidegree, Matrix> log_delta_components(const DeltaObject& d);

/// The mixed Hodge structure on the gr basis with the given delta. With
/// self_check set, the result is fed back through delta_operator and any
/// disagreement raises MathViolation.
ComplexMHS delta_to_mhs(const DeltaObject& d, bool self_check = true);

/// Delta datum of the conjugate structure.
DeltaObject conjugate_delta(const DeltaObject& d);

}  // namespace hodge
