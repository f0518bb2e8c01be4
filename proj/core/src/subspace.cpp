#include "superschur/subspace.hpp"

#include "superschur/errors.hpp"

namespace superschur {

namespace {

Vec parity_part(const LieSuperalgebra& L, const Vec& v, Parity p) {
  Vec out(v.size());
  for (std::size_t i = L.begin(p); i < L.end(p); ++i) out[i] = v[i];
  return out;
}

Matrix intersect_rows(const Matrix& a, const Matrix& b, std::size_t n) {
  if (a.empty() || b.empty()) return {};
  const std::size_t unknowns = a.size() + b.size();
  Matrix equations(n, Vec(unknowns));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < a.size(); ++r) equations[k][r] = a[r][k];
    for (std::size_t s = 0; s < b.size(); ++s) equations[k][a.size() + s] = -b[s][k];
  }
  Matrix out;
  for (const auto& sol : kernel(equations, unknowns)) {
    Vec v(n);
    for (std::size_t r = 0; r < a.size(); ++r) axpy(v, sol[r], a[r]);
    out.push_back(std::move(v));
  }
  return rref(std::move(out));
}

}  // namespace

Subspace Subspace::span(const LieSuperalgebra& parent, const std::vector<Vec>& vectors) {
  Matrix even, odd;
  for (const auto& v : vectors) {
    if (v.size() != parent.dim()) throw InvalidParams("vector length does not match algebra");
    if (superschur::is_zero(v)) continue;
    const auto p = homogeneous_parity(parent, v);
    if (!p) throw NonHomogeneous();
    (*p == Parity::Even ? even : odd).push_back(v);
  }
  return Subspace(parent, rref(std::move(even)), rref(std::move(odd)));
}

Subspace Subspace::homogeneous_closure(const LieSuperalgebra& parent,
                                       const std::vector<Vec>& vectors) {
  std::vector<Vec> parts;
  for (const auto& v : vectors) {
    if (v.size() != parent.dim()) throw InvalidParams("vector length does not match algebra");
    parts.push_back(parity_part(parent, v, Parity::Even));
    parts.push_back(parity_part(parent, v, Parity::Odd));
  }
  return span(parent, parts);
}

Subspace Subspace::zero(const LieSuperalgebra& parent) { return Subspace(parent, {}, {}); }

Subspace Subspace::whole(const LieSuperalgebra& parent) {
  std::vector<Vec> units;
  for (std::size_t i = 0; i < parent.dim(); ++i) units.push_back(unit_vec(parent.dim(), i));
  return span(parent, units);
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out(even_rows_.begin(), even_rows_.end());
  out.insert(out.end(), odd_rows_.begin(), odd_rows_.end());
  return out;
}

SuperDim Subspace::sdim() const {
  return SuperDim(static_cast<std::int64_t>(even_rows_.size()),
                  static_cast<std::int64_t>(odd_rows_.size()));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != parent_.dim()) return false;
  return in_span(parity_part(parent_, v, Parity::Even), even_rows_) &&
         in_span(parity_part(parent_, v, Parity::Odd), odd_rows_);
}

void Subspace::require_same_parent(const Subspace& other) const {
  if (!parent_.same_as(other.parent_)) throw ParentMismatch();
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  require_same_parent(other);
  for (const auto& v : basis()) {
    if (!other.contains(v)) return false;
  }
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.parent_.same_as(b.parent_) && a.even_rows_ == b.even_rows_ &&
         a.odd_rows_ == b.odd_rows_;
}

Subspace Subspace::operator+(const Subspace& other) const {
  require_same_parent(other);
  auto vectors = basis();
  const auto more = other.basis();
  vectors.insert(vectors.end(), more.begin(), more.end());
  return span(parent_, vectors);
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_same_parent(other);
  const std::size_t n = parent_.dim();
  return Subspace(parent_, intersect_rows(even_rows_, other.even_rows_, n),
                  intersect_rows(odd_rows_, other.odd_rows_, n));
}

}  // namespace superschur
