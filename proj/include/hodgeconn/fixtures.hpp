#pragma once

#include <random>

#include "hodgeconn/mhs.hpp"
#include "hodgeconn/splitting.hpp"

namespace hodge {

using Rng = std::mt19937_64;

/// Rank 2 extension of Q(0) by Q(1) with extension datum c. Basis order is
/// (e_{-1}, e_0): W_{-2} = span(e_{-1}), F'^0 = span(e_0),
/// F''^0 = span(e_0 + c e_{-1}).
ComplexMHS kummer_mhs(const Scalar& c);

/// Rank 3, labels (-2,-2), (-1,-1), (0,0), delta = 1 + a E_{01} + b E_{12}.
DeltaObject t3_delta(const Scalar& a, const Scalar& b);

/// The real Tate structure R(n): one-dimensional of weight -2n.
RealMHS real_tate(int n);

/// Real Kummer structure with F^0 = span(e_0 + z e_{-1}).
RealMHS real_kummer(const Scalar& z);

struct RandomSpec {
  std::size_t max_dim = 8;
  int min_weight = -6;
  int max_weight = 6;
  Field field = Field::Qi;
};

Scalar random_scalar(Rng& rng, Field field, int bound = 3);
Matrix random_invertible(Rng& rng, std::size_t n, Field field);
/// Random unipotent g with g - 1 strictly lowering on the given space.
Matrix random_lowering_unipotent(Rng& rng, const BigradedSpace& space, Field field);

DeltaObject random_delta(Rng& rng, const RandomSpec& spec);
/// delta_to_mhs of a random delta object, then a random change of basis.
ComplexMHS random_mhs(Rng& rng, const RandomSpec& spec);
/// Replace one Hodge filtration step by a strictly smaller subspace chosen
/// so that opposedness must fail. Requires dim > 0.
ComplexMHS corrupt_mhs(Rng& rng, const ComplexMHS& v);

}  // namespace hodge
