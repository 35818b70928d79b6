#pragma once

#include <map>
#include <utility>

#include "hodgeconn/bigraded.hpp"
#include "hodgeconn/polynomial.hpp"
#include "hodgeconn/splitting.hpp"

namespace hodge {

/// Coefficient matrices keyed by (p, q) with p, q >= 1; each acts on the whole
/// bigraded space and has bidegree (-p, -q). Zero matrices are not stored.
using BlockMap = std::map<Bidegree, Matrix>;

/// Omega = sum A_{p,q} t1^{p-1} t2^q dt1 + B_{p,q} t1^p t2^{q-1} dt2.
class EquivariantConnection {
 public:
  EquivariantConnection() = default;
  /// Throws MathViolation when a block has the wrong bidegree or p, q < 1,
  /// DimensionMismatch on shape errors.
  EquivariantConnection(BigradedSpace space, BlockMap a, BlockMap b);

  const BigradedSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const BlockMap& A() const { return a_; }
  const BlockMap& B() const { return b_; }
  Matrix A(Bidegree pq) const;
  Matrix B(Bidegree pq) const;
  bool is_zero() const { return a_.empty() && b_.empty(); }

  friend bool operator==(const EquivariantConnection&, const EquivariantConnection&) = default;

 private:
  BigradedSpace space_;
  BlockMap a_;
  BlockMap b_;
};

/// g = 1 + sum C_{p,q} t1^p t2^q.
class GaugeTransformation {
 public:
  GaugeTransformation() = default;
  GaugeTransformation(BigradedSpace space, BlockMap c);
  static GaugeTransformation identity(const BigradedSpace& space) { return GaugeTransformation(space, {}); }

  const BigradedSpace& space() const { return space_; }
  const BlockMap& C() const { return c_; }
  bool is_identity() const { return c_.empty(); }
  PolyMatrix polynomial() const;
  /// The gauge transformation g h.
  GaugeTransformation compose(const GaugeTransformation& h) const;

  friend bool operator==(const GaugeTransformation&, const GaugeTransformation&) = default;

 private:
  BigradedSpace space_;
  BlockMap c_;
};

struct ConnectionForm {
  PolyMatrix P;  // dt1 coefficient
  PolyMatrix Q;  // dt2 coefficient
};

ConnectionForm connection_form(const EquivariantConnection& c);
/// dt1 ^ dt2 coefficient of d Omega + Omega ^ Omega.
PolyMatrix curvature(const EquivariantConnection& c);
bool is_flat(const EquivariantConnection& c);

/// Omega -> g^{-1} dg + g^{-1} Omega g.
EquivariantConnection apply_gauge(const EquivariantConnection& c, const GaugeTransformation& g);

/// Normalized connection (A + B = 0 blockwise) and the gauge reaching it.
std::pair<EquivariantConnection, GaugeTransformation> normalize_fock_schwinger(const EquivariantConnection& c);
bool is_fock_schwinger(const EquivariantConnection& c);

/// The normalized connection whose triangle holonomy is delta.
EquivariantConnection connection_from_delta(const DeltaObject& d);

}  // namespace hodge
