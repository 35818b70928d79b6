#include "hodgeconn/bigraded.hpp"

#include <algorithm>

#include "hodgeconn/errors.hpp"

namespace hodge {

bool canonical_less(const Bidegree& a, const Bidegree& b) {
  int wa = a.first + a.second, wb = b.first + b.second;
  if (wa != wb) return wa < wb;
  return a.first < b.first;
}

BigradedSpace::BigradedSpace(std::vector<Bidegree> labels) : labels_(std::move(labels)) {
  if (!std::is_sorted(labels_.begin(), labels_.end(), canonical_less))
    throw InputError("bigraded basis is not in canonical (weight, p) order");
}

BigradedSpace BigradedSpace::from_hodge(const HodgeNumbers& h) {
  std::vector<Bidegree> labels;
  for (const auto& [pq, d] : h) labels.insert(labels.end(), d, pq);
  std::stable_sort(labels.begin(), labels.end(), canonical_less);
  return BigradedSpace(std::move(labels));
}

HodgeNumbers BigradedSpace::hodge() const {
  HodgeNumbers h;
  for (const auto& l : labels_) ++h[l];
  return h;
}

std::vector<std::size_t> BigradedSpace::indices_of(Bidegree b) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == b) out.push_back(i);
  return out;
}

Matrix BigradedSpace::component(const Matrix& m, int dp, int dq) const {
  if (m.rows() != dim() || m.cols() != dim()) throw DimensionMismatch("operator does not act on the bigraded space");
  Matrix out(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (labels_[j].first - labels_[i].first == dp && labels_[j].second - labels_[i].second == dq)
        out(i, j) = m(i, j);
  return out;
}

bool BigradedSpace::has_bidegree(const Matrix& m, int dp, int dq) const {
  return component(m, dp, dq) == m;
}

bool BigradedSpace::strictly_lowering(const Matrix& m) const {
  if (m.rows() != dim() || m.cols() != dim()) throw DimensionMismatch("operator does not act on the bigraded space");
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (!m(i, j).is_zero() && !(labels_[i].first < labels_[j].first && labels_[i].second < labels_[j].second))
        return false;
  return true;
}

}  // namespace hodge
