#pragma once

#include <optional>
#include <utility>

#include "superschur/algebra.hpp"
#include "superschur/superdim.hpp"

namespace superschur {

struct InvariantReport {
  SuperDim sdim_L;
  SuperDim sdim_L2;
  SuperDim sdim_Z;
  SuperDim sdim_LmodZ;
  SuperDim sdim_M;
  /// bound(sdim_L) - sdim_M
  SignedSuperDim smr;
  std::int64_t mr = 0;
  /// bound(sdim_LmodZ) - sdim_L2
  SignedSuperDim sdr;
  std::int64_t dr = 0;
  std::optional<std::size_t> nilpotency_class;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport report(const LieSuperalgebra& L);

/// Super-multiplier-rank from a known multiplier superdimension.
SignedSuperDim smr_from(const SuperDim& sdim_L, const SuperDim& sdim_M);
SignedSuperDim smr(const LieSuperalgebra& L);

struct DerivedRank {
  SignedSuperDim sdr;
  std::int64_t dr = 0;
};
DerivedRank sdr_report(const LieSuperalgebra& L);

struct LambdaMu {
  SuperDim lambda;  // sdim [L, z]
  SuperDim mu;      // sdim of the central quotient of L/[L, z]
};

/// Throws NonHomogeneous or NotInSecondCenterMinusCenter.
LambdaMu lambda_mu(const LieSuperalgebra& L, const Vec& z);

/// Whether lambda/mu obey the bounds for z of the given parity against
/// (m,n) = sdim L/Z(L): for even z, lambda <= (m-1,n) and mu <= (m-1,n); for
/// odd z, mu <= (m,n-1).
bool lambda_mu_within_bounds(const LambdaMu& lm, Parity parity, const SuperDim& central_quotient);

struct BoundReport {
  /// sdim L^2 <= bound(sdim L/Z(L))
  bool derived_bound = false;
  SignedSuperDim derived_margin;
  /// sdim M(L) <= bound(sdim L)
  bool multiplier_bound = false;
  SignedSuperDim multiplier_margin;
  /// sdim(L^2 ∩ Z(L)) <= sdim M(L/Z(L))
  bool central_image_bound = false;
  SignedSuperDim central_image_margin;

  bool all() const { return derived_bound && multiplier_bound && central_image_bound; }
};

BoundReport check_bounds(const LieSuperalgebra& L);

struct KunnethReport {
  SuperDim lhs;  // sdim M(A ⊕ B), computed directly
  SuperDim rhs;  // sdim M(A) + sdim M(B) + sdim(A/A^2 ⊗ B/B^2)
  bool holds() const { return lhs == rhs; }
};

KunnethReport kunneth_check(const LieSuperalgebra& A, const LieSuperalgebra& B);

}  // namespace superschur
