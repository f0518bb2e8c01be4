#pragma once

#include <vector>

#include "superschur/algebra.hpp"

namespace superschur {

/// Homogeneous subspace of an algebra, stored as canonical RREF coordinate
/// matrices for its even and odd parts. Equality is matrix equality.
class Subspace {
 public:
  /// Span of homogeneous vectors; throws NonHomogeneous on a mixed vector.
  static Subspace span(const LieSuperalgebra& parent, const std::vector<Vec>& vectors);
  /// Span of vectors that are split into their parity components first.
  static Subspace homogeneous_closure(const LieSuperalgebra& parent,
                                      const std::vector<Vec>& vectors);
  static Subspace zero(const LieSuperalgebra& parent);
  static Subspace whole(const LieSuperalgebra& parent);

  const LieSuperalgebra& parent() const { return parent_; }
  const Matrix& even_rows() const { return even_rows_; }
  const Matrix& odd_rows() const { return odd_rows_; }
  const Matrix& rows(Parity p) const { return p == Parity::Even ? even_rows_ : odd_rows_; }
  /// Even rows followed by odd rows.
  std::vector<Vec> basis() const;

  SuperDim sdim() const;
  bool is_zero() const { return even_rows_.empty() && odd_rows_.empty(); }

  bool contains(const Vec& v) const;
  /// Throws ParentMismatch.
  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

  /// Throws ParentMismatch.
  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

 private:
  Subspace(LieSuperalgebra parent, Matrix even_rows, Matrix odd_rows)
      : parent_(std::move(parent)), even_rows_(std::move(even_rows)),
        odd_rows_(std::move(odd_rows)) {}
  void require_same_parent(const Subspace& other) const;

  LieSuperalgebra parent_;
  Matrix even_rows_;
  Matrix odd_rows_;
};

}  // namespace superschur
