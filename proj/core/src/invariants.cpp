#include "superschur/invariants.hpp"

#include "superschur/cohomology.hpp"
#include "superschur/errors.hpp"
#include "superschur/structure.hpp"

namespace superschur {

SignedSuperDim smr_from(const SuperDim& sdim_L, const SuperDim& sdim_M) {
  return bound(sdim_L) - sdim_M;
}

SignedSuperDim smr(const LieSuperalgebra& L) {
  return smr_from(L.sdim(), multiplier(L).sdim_M);
}

InvariantReport report(const LieSuperalgebra& L) {
  InvariantReport r;
  r.sdim_L = L.sdim();
  r.sdim_L2 = derived_subalgebra(L).sdim();
  r.sdim_Z = center(L).sdim();
  r.sdim_LmodZ = (r.sdim_L - r.sdim_Z).to_superdim();
  r.sdim_M = multiplier(L).sdim_M;
  r.smr = smr_from(r.sdim_L, r.sdim_M);
  r.mr = r.smr.total();
  r.sdr = bound(r.sdim_LmodZ) - r.sdim_L2;
  r.dr = r.sdr.total();
  r.nilpotency_class = nilpotency_class(L);
  return r;
}

DerivedRank sdr_report(const LieSuperalgebra& L) {
  const SuperDim central_quotient = (L.sdim() - center(L).sdim()).to_superdim();
  DerivedRank out;
  out.sdr = bound(central_quotient) - derived_subalgebra(L).sdim();
  out.dr = out.sdr.total();
  return out;
}

LambdaMu lambda_mu(const LieSuperalgebra& L, const Vec& z) {
  if (z.size() != L.dim()) throw InvalidParams("element has wrong length");
  if (is_zero(z)) throw NotInSecondCenterMinusCenter();
  if (!homogeneous_parity(L, z)) throw NonHomogeneous();
  if (!second_center(L).contains(z) || center(L).contains(z)) {
    throw NotInSecondCenterMinusCenter();
  }
  const Subspace image = bracket_with(L, z);
  const Quotient q = quotient(L, image);
  LambdaMu out;
  out.lambda = image.sdim();
  out.mu = (q.algebra().sdim() - center(q.algebra()).sdim()).to_superdim();
  return out;
}

bool lambda_mu_within_bounds(const LambdaMu& lm, Parity parity, const SuperDim& central_quotient) {
  const SignedSuperDim mn = central_quotient.as_signed();
  if (parity == Parity::Even) {
    const SignedSuperDim cap = mn - SignedSuperDim{1, 0};
    return leq(lm.lambda.as_signed(), cap) && leq(lm.mu.as_signed(), cap);
  }
  return leq(lm.mu.as_signed(), mn - SignedSuperDim{0, 1});
}

BoundReport check_bounds(const LieSuperalgebra& L) {
  BoundReport r;
  const Subspace L2 = derived_subalgebra(L);
  const Subspace Z = center(L);
  const SuperDim central_quotient = (L.sdim() - Z.sdim()).to_superdim();

  r.derived_margin = bound(central_quotient) - L2.sdim();
  r.derived_bound = r.derived_margin.is_nonnegative();

  r.multiplier_margin = bound(L.sdim()) - multiplier(L).sdim_M;
  r.multiplier_bound = r.multiplier_margin.is_nonnegative();

  const Quotient q = quotient(L, Z);
  r.central_image_margin = multiplier(q.algebra()).sdim_M - L2.intersect(Z).sdim();
  r.central_image_bound = r.central_image_margin.is_nonnegative();
  return r;
}

KunnethReport kunneth_check(const LieSuperalgebra& A, const LieSuperalgebra& B) {
  KunnethReport r;
  r.lhs = multiplier(direct_sum(A, B)).sdim_M;
  const SuperDim abel_A = (A.sdim() - derived_subalgebra(A).sdim()).to_superdim();
  const SuperDim abel_B = (B.sdim() - derived_subalgebra(B).sdim()).to_superdim();
  r.rhs = multiplier(A).sdim_M + multiplier(B).sdim_M + tensor(abel_A, abel_B);
  return r;
}

}  // namespace superschur
