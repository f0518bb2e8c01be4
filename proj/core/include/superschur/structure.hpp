#pragma once

#include <optional>
#include <vector>

#include "superschur/algebra.hpp"
#include "superschur/subspace.hpp"

namespace superschur {

/// Span of [u, w] over u in U, w in W. Throws ParentMismatch.
Subspace bracket_subspaces(const LieSuperalgebra& L, const Subspace& U, const Subspace& W);

/// L^2 = [L, L].
Subspace derived_subalgebra(const LieSuperalgebra& L);

/// Z(L).
Subspace center(const LieSuperalgebra& L);

/// Z_L(z) = {x : [x, z] = 0}. Throws NonHomogeneous when z mixes parities.
Subspace centralizer(const LieSuperalgebra& L, const Vec& z);

/// [L, z]. Throws NonHomogeneous when z mixes parities.
Subspace bracket_with(const LieSuperalgebra& L, const Vec& z);

/// Z_2(L), the preimage of Z(L/Z(L)).
Subspace second_center(const LieSuperalgebra& L);

/// L, L^2, [L, L^2], ... stopping before the first repeated term, so the
/// last entry is zero exactly when L is nilpotent.
std::vector<Subspace> lower_central_series(const LieSuperalgebra& L);

/// Nilpotency class (number of strict steps down to zero), or nullopt when
/// the series stabilizes at a nonzero term. The zero algebra has class 0.
std::optional<std::size_t> nilpotency_class(const LieSuperalgebra& L);
bool is_nilpotent(const LieSuperalgebra& L);

bool is_ideal(const LieSuperalgebra& L, const Subspace& I);

/// L/I on the coset basis of standard basis vectors at the non-pivot columns
/// of I (taken per parity, in order).
class Quotient {
 public:
  const LieSuperalgebra& algebra() const { return algebra_; }
  const LieSuperalgebra& source() const { return source_; }
  const Subspace& ideal() const { return ideal_; }
  /// Coordinates in L -> coordinates in L/I.
  Vec project(const Vec& x) const;
  /// Coordinates in L/I -> the canonical coset representative in L.
  Vec lift(const Vec& y) const;
  /// Image of a subspace of L.
  Subspace project(const Subspace& U) const;
  /// Full preimage of a subspace of L/I.
  Subspace preimage(const Subspace& V) const;

 private:
  friend Quotient quotient(const LieSuperalgebra& L, const Subspace& I);
  Quotient(LieSuperalgebra source, Subspace ideal, LieSuperalgebra algebra,
           std::vector<std::size_t> kept)
      : source_(std::move(source)), ideal_(std::move(ideal)), algebra_(std::move(algebra)),
        kept_(std::move(kept)) {}

  LieSuperalgebra source_;
  Subspace ideal_;
  LieSuperalgebra algebra_;
  std::vector<std::size_t> kept_;
};

/// Throws NotAnIdeal or ParentMismatch.
Quotient quotient(const LieSuperalgebra& L, const Subspace& I);

/// A ⊕ B on the basis A_even, B_even, A_odd, B_odd. Returns the algebra and,
/// optionally, the positions of A's and B's basis elements inside it.
struct DirectSum {
  LieSuperalgebra algebra;
  std::vector<std::size_t> first_index;
  std::vector<std::size_t> second_index;
};
DirectSum direct_sum_with_embedding(const LieSuperalgebra& A, const LieSuperalgebra& B);
LieSuperalgebra direct_sum(const LieSuperalgebra& A, const LieSuperalgebra& B);

/// Structure constants on the basis f_j = sum_i P[i][j] e_i (the columns of
/// P are the new basis vectors). Throws ParityMixing or SingularMatrix.
LieSuperalgebra change_basis(const LieSuperalgebra& L, const Matrix& P);

/// (K, M) with K/M the algebra of interest and M ⊆ Z(K) ∩ K^2.
class DefiningPair {
 public:
  /// Throws InvalidParams when M is not inside Z(K) ∩ K^2.
  static DefiningPair make(LieSuperalgebra K, Subspace M);

  const LieSuperalgebra& cover() const { return K_; }
  const Subspace& kernel() const { return M_; }
  Quotient base() const { return quotient(K_, M_); }

 private:
  DefiningPair(LieSuperalgebra K, Subspace M) : K_(std::move(K)), M_(std::move(M)) {}
  LieSuperalgebra K_;
  Subspace M_;
};

}  // namespace superschur
