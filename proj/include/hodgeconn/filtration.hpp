#pragma once

#include <map>
#include <vector>

#include "hodgeconn/subspace.hpp"

namespace hodge {

enum class Direction { Increasing, Decreasing };

/// A finite filtration of K^n, stored by its jumps.
///
/// An increasing filtration W keeps the steps W_k with W_k != W_{k-1}; below
/// the first jump it is 0 and from the last jump on it is the whole space. A
/// decreasing filtration F keeps F^p with F^p != F^{p+1}; it is the whole
/// space up to the first jump and 0 after the last one.
class Filtration {
 public:
  Filtration() = default;
  /// Build from explicitly listed steps. For an increasing filtration an
  /// index between listed ones takes the step of the nearest listed index
  /// below it, indices under the first listed one give 0 and indices over the
  /// last give the whole space; the decreasing case is the mirror image.
  /// Throws InputError on non-monotone steps and DimensionMismatch on
  /// ambient mismatch. An empty step map is allowed only when n = 0.
  Filtration(Direction dir, std::size_t ambient, const std::map<int, Subspace>& steps);

  /// The filtration with a single jump at `index`.
  static Filtration pure(Direction dir, std::size_t ambient, int index);

  Direction direction() const { return dir_; }
  bool increasing() const { return dir_ == Direction::Increasing; }
  std::size_t ambient() const { return ambient_; }
  const std::map<int, Subspace>& jumps() const { return jumps_; }
  /// First and last jump; both 0 for the zero space.
  int min_index() const;
  int max_index() const;

  Subspace at(int index) const;
  /// Steps at lo, lo+1, ..., hi.
  std::vector<Subspace> window(int lo, int hi) const;
  /// dim gr at `index`: W_k / W_{k-1} or F^p / F^{p+1}.
  std::size_t graded_dim(int index) const;

  Filtration conj() const;
  /// Image under an invertible matrix g (steps map to g(step)).
  Filtration transform(const Matrix& g) const;
  /// True iff f(this_k) is contained in target_k for every index.
  bool mapped_into(const Matrix& f, const Filtration& target) const;

  friend bool operator==(const Filtration& a, const Filtration& b) = default;

 private:
  Direction dir_ = Direction::Increasing;
  std::size_t ambient_ = 0;
  std::map<int, Subspace> jumps_;
};

Filtration tensor_filtration(const Filtration& a, const Filtration& b);
/// Dual filtration on the dual space in the dual basis: (F*)^p = ann F^{1-p}
/// and W*_n = ann W_{-n-1}.
Filtration dual_filtration(const Filtration& f);
Filtration direct_sum_filtration(const Filtration& a, const Filtration& b);

}  // namespace hodge
