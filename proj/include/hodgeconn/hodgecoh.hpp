#pragma once

#include <string>
#include <vector>

#include "hodgeconn/connection.hpp"
#include "hodgeconn/mhs.hpp"

namespace hodge {

/// Basis element v_i t1^a t2^b (slot 0) or v_i t1^a t2^b dt_slot (slots 1, 2).
struct MonomialLabel {
  std::size_t vector = 0;
  int a = 0;
  int b = 0;
  int slot = 0;
  std::string str() const;
  friend bool operator==(const MonomialLabel&, const MonomialLabel&) = default;
};

/// Invariant sections -> invariant 1-forms, s -> ds + Omega s.
struct TwoTermComplex {
  std::vector<MonomialLabel> domain;
  std::vector<MonomialLabel> codomain;
  Matrix map;  // codomain x domain
};

TwoTermComplex invariant_complex(const EquivariantConnection& c);

struct AbsoluteCohomology {
  std::size_t ext0 = 0;
  std::size_t ext1 = 0;
  Matrix kernel;                            // rows: kernel vectors in domain coordinates
  std::vector<std::size_t> cokernel_basis;  // codomain labels spanning a complement of the image
};

AbsoluteCohomology cohomology(const TwoTermComplex& k);
AbsoluteCohomology absolute_cohomology(const EquivariantConnection& c);
/// Via the normalized connection of delta_operator(v).
AbsoluteCohomology absolute_cohomology(const ComplexMHS& v);
/// Ext^i(a, b) as the absolute cohomology of a^* (x) b.
AbsoluteCohomology absolute_ext(const ComplexMHS& a, const ComplexMHS& b);

/// dim Hom(Q(0), V) = dim(W_0 & F'^0 & F''^0).
std::size_t hom_from_unit(const ComplexMHS& v);

/// Real dimensions of the cohomology of the conjugation-fixed subcomplex.
/// Throws MathViolation when the complex is not conjugation-equivariant.
std::pair<std::size_t, std::size_t> real_absolute_cohomology(const RealMHS& v);

}  // namespace hodge
