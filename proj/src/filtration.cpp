#include "hodgeconn/filtration.hpp"

#include <algorithm>

#include "hodgeconn/errors.hpp"

namespace hodge {

namespace {

Subspace raw_at(Direction dir, std::size_t n, const std::map<int, Subspace>& steps, int index) {
  if (dir == Direction::Increasing) {
    auto it = steps.upper_bound(index);
    if (it == steps.begin()) return Subspace::zero(n);
    if (index > steps.rbegin()->first) return Subspace::full(n);
    return std::prev(it)->second;
  }
  auto it = steps.lower_bound(index);
  if (it == steps.end()) return Subspace::zero(n);
  if (index < steps.begin()->first) return Subspace::full(n);
  return it->second;
}

}  // namespace

Filtration::Filtration(Direction dir, std::size_t ambient, const std::map<int, Subspace>& steps)
    : dir_(dir), ambient_(ambient) {
  for (const auto& [k, s] : steps)
    if (s.ambient() != ambient) throw DimensionMismatch("filtration step has the wrong ambient dimension");
  if (steps.empty()) {
    if (ambient != 0) throw InputError("filtration on a nonzero space needs at least one step");
    return;
  }
  if (ambient == 0) return;
  const Subspace* prev = nullptr;
  for (const auto& [k, s] : steps) {
    if (prev) {
      bool ok = dir == Direction::Increasing ? s.contains(*prev) : prev->contains(s);
      if (!ok) throw InputError("filtration steps are not monotone at index " + std::to_string(k));
    }
    prev = &s;
  }
  int lo = steps.begin()->first - 1;
  int hi = steps.rbegin()->first + 1;
  for (int k = lo; k <= hi; ++k) {
    Subspace here = raw_at(dir, ambient, steps, k);
    int neighbour = dir == Direction::Increasing ? k - 1 : k + 1;
    if (!(here == raw_at(dir, ambient, steps, neighbour))) jumps_.emplace(k, std::move(here));
  }
}

Filtration Filtration::pure(Direction dir, std::size_t ambient, int index) {
  if (ambient == 0) return Filtration(dir, 0, {});
  return Filtration(dir, ambient, {{index, Subspace::full(ambient)}});
}

int Filtration::min_index() const { return jumps_.empty() ? 0 : jumps_.begin()->first; }
int Filtration::max_index() const { return jumps_.empty() ? 0 : jumps_.rbegin()->first; }

Subspace Filtration::at(int index) const {
  if (jumps_.empty()) return Subspace::zero(ambient_);
  return raw_at(dir_, ambient_, jumps_, index);
}

std::vector<Subspace> Filtration::window(int lo, int hi) const {
  std::vector<Subspace> out;
  for (int k = lo; k <= hi; ++k) out.push_back(at(k));
  return out;
}

std::size_t Filtration::graded_dim(int index) const {
  auto it = jumps_.find(index);
  if (it == jumps_.end()) return 0;
  return it->second.dim() - at(increasing() ? index - 1 : index + 1).dim();
}

Filtration Filtration::conj() const {
  Filtration f = *this;
  for (auto& [k, s] : f.jumps_) s = s.conj();
  return f;
}

Filtration Filtration::transform(const Matrix& g) const {
  if (g.rows() != ambient_ || g.cols() != ambient_) throw DimensionMismatch("filtration transform: shape mismatch");
  Filtration f = *this;
  for (auto& [k, s] : f.jumps_) {
    s = s.image(g);
    if (s.dim() != jumps_.at(k).dim()) throw InputError("filtration transform: matrix is singular");
  }
  return f;
}

bool Filtration::mapped_into(const Matrix& f, const Filtration& target) const {
  if (f.cols() != ambient_ || f.rows() != target.ambient_)
    throw DimensionMismatch("morphism shape does not match the filtrations");
  if (dir_ != target.dir_) throw InputError("comparing filtrations of different directions");
  std::vector<int> indices;
  for (const auto& [k, s] : jumps_) indices.push_back(k);
  for (const auto& [k, s] : target.jumps_) {
    indices.push_back(k);
    indices.push_back(increasing() ? k - 1 : k + 1);
  }
  for (int k : indices)
    if (!target.at(k).contains(at(k).image(f))) return false;
  return true;
}

Filtration tensor_filtration(const Filtration& a, const Filtration& b) {
  if (a.direction() != b.direction()) throw InputError("tensor of filtrations of different directions");
  std::size_t n = a.ambient() * b.ambient();
  if (n == 0) return Filtration(a.direction(), 0, {});
  std::map<int, Subspace> steps;
  for (int k = a.min_index() + b.min_index(); k <= a.max_index() + b.max_index(); ++k) {
    Subspace s = Subspace::zero(n);
    for (int i = a.min_index(); i <= a.max_index(); ++i) s = s + tensor(a.at(i), b.at(k - i));
    steps.emplace(k, std::move(s));
  }
  return Filtration(a.direction(), n, steps);
}

Filtration dual_filtration(const Filtration& f) {
  std::size_t n = f.ambient();
  if (n == 0) return f;
  std::map<int, Subspace> steps;
  if (f.increasing()) {
    for (int k = -f.max_index() - 1; k <= -f.min_index() - 1; ++k) steps.emplace(k, f.at(-k - 1).annihilator());
  } else {
    for (int p = 1 - f.max_index(); p <= 1 - f.min_index(); ++p) steps.emplace(p, f.at(1 - p).annihilator());
  }
  return Filtration(f.direction(), n, steps);
}

Filtration direct_sum_filtration(const Filtration& a, const Filtration& b) {
  if (a.direction() != b.direction()) throw InputError("direct sum of filtrations of different directions");
  std::size_t n = a.ambient() + b.ambient();
  if (a.ambient() == 0) return b;
  if (b.ambient() == 0) return a;
  std::map<int, Subspace> steps;
  int lo = std::min(a.min_index(), b.min_index());
  int hi = std::max(a.max_index(), b.max_index());
  for (int k = lo; k <= hi; ++k) steps.emplace(k, direct_sum(a.at(k), b.at(k)));
  return Filtration(a.direction(), n, steps);
}

}  // namespace hodge
