#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "superschur/algebra.hpp"
#include "superschur/structure.hpp"

namespace superschur {

/// Coordinates (i, j), i <= j, on which a super-alternating 2-cochain of a
/// given parity with values in the even line can be nonzero: |e_i| + |e_j|
/// equals the cochain parity, and i == j only for odd e_i.
std::vector<std::pair<std::size_t, std::size_t>> cochain_coordinates(const LieSuperalgebra& L,
                                                                     Parity parity);

/// Super-alternating bilinear form f with f(x,y) = -(-1)^{|x||y|} f(y,x),
/// stored on pairs i <= j.
class Cochain2 {
 public:
  Cochain2(Parity parity, std::size_t dim) : parity_(parity), dim_(dim) {}
  /// Builds a cochain from a coordinate vector aligned with
  /// cochain_coordinates(L, parity).
  static Cochain2 from_coordinates(const LieSuperalgebra& L, Parity parity, const Vec& coords);

  Parity parity() const { return parity_; }
  std::size_t dim() const { return dim_; }
  const std::map<std::pair<std::size_t, std::size_t>, Scalar>& values() const { return values_; }

  /// Sets f(e_i, e_j) for i <= j.
  void set(std::size_t i, std::size_t j, const Scalar& value);
  /// f(e_i, e_j) for any i, j.
  Scalar eval(const LieSuperalgebra& L, std::size_t i, std::size_t j) const;
  /// f(x, y) for coordinate vectors.
  Scalar eval(const LieSuperalgebra& L, const Vec& x, const Vec& y) const;

  Vec coordinates(const LieSuperalgebra& L) const;

 private:
  Parity parity_;
  std::size_t dim_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> values_;
};

/// Equation matrix of the cocycle condition over the coordinates of
/// cochain_coordinates(L, parity); one row per basis triple i <= j <= k.
Matrix cocycle_equations(const LieSuperalgebra& L, Parity parity);

/// RREF basis of the cocycle space Z^2 of the given parity.
std::vector<Cochain2> cocycle_space(const LieSuperalgebra& L, Parity parity);

/// RREF basis of B^2 = {(x,y) -> -g([x,y])} for g of the given parity.
std::vector<Cochain2> coboundary_space(const LieSuperalgebra& L, Parity parity);

bool is_cocycle(const LieSuperalgebra& L, const Cochain2& f);

struct MultiplierResult {
  SuperDim sdim_Z2;
  SuperDim sdim_B2;
  SuperDim sdim_M;
  /// Canonical representatives of H^2: even classes first, then odd.
  std::vector<Cochain2> cocycle_basis;
};

/// Superdimension of the Schur multiplier, computed as H^2(L) with trivial
/// even one-dimensional coefficients.
MultiplierResult multiplier(const LieSuperalgebra& L);

/// K = L ⊕ span(c_1..c_r) with [x,y]_K = [x,y]_L + sum_r f_r(x,y) c_r.
struct CentralExtension {
  LieSuperalgebra algebra;
  Subspace kernel;
  /// Images of L's basis elements inside K.
  std::vector<std::size_t> base_index;
  bool kernel_in_center = true;
  bool kernel_in_derived = true;

  bool stem_condition() const { return kernel_in_derived; }
  bool is_defining_pair() const { return kernel_in_center && kernel_in_derived; }
  /// Throws InvalidParams when the stem condition fails.
  DefiningPair defining_pair() const;
};

/// Throws NotACocycle or DependentClasses.
CentralExtension central_extension(const LieSuperalgebra& L, const std::vector<Cochain2>& chosen);

/// Central extension by the full representative basis of multiplier(L).
CentralExtension cover_candidate(const LieSuperalgebra& L);

}  // namespace superschur
