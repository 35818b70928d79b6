#pragma once

#include <utility>
#include <vector>

#include "hodgeconn/matrix.hpp"
#include "hodgeconn/mhs.hpp"

namespace hodge {

using Bidegree = std::pair<int, int>;

/// K^N with every basis vector labelled by a bidegree (p, q).
///
/// The canonical order sorts labels by weight p+q, then by p; within one
/// label the order of vectors is whatever the producer chose.
class BigradedSpace {
 public:
  BigradedSpace() = default;
  /// Labels must already be in canonical order (InputError otherwise).
  explicit BigradedSpace(std::vector<Bidegree> labels);
  /// h^{p,q} copies of each (p, q), in canonical order.
  static BigradedSpace from_hodge(const HodgeNumbers& h);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<Bidegree>& labels() const { return labels_; }
  const Bidegree& label(std::size_t i) const { return labels_[i]; }
  HodgeNumbers hodge() const;
  std::vector<std::size_t> indices_of(Bidegree b) const;

  /// The part of m mapping label (p, q) to label (p - dp, q - dq).
  Matrix component(const Matrix& m, int dp, int dq) const;
  /// Every nonzero entry of m lowers the bidegree by exactly (dp, dq).
  bool has_bidegree(const Matrix& m, int dp, int dq) const;
  /// Every nonzero entry lowers p and q by at least one.
  bool strictly_lowering(const Matrix& m) const;

  friend bool operator==(const BigradedSpace&, const BigradedSpace&) = default;

 private:
  std::vector<Bidegree> labels_;
};

bool canonical_less(const Bidegree& a, const Bidegree& b);

}  // namespace hodge
