#include <gtest/gtest.h>

#include "superschur/constructions.hpp"
#include "superschur/errors.hpp"
#include "superschur/invariants.hpp"
#include "superschur/structure.hpp"

using namespace superschur;

TEST(Invariants, Reports) {
  const auto h10 = report(heisenberg_even(1, 0));
  EXPECT_EQ(h10.smr, (SignedSuperDim{1, 0}));
  EXPECT_EQ(h10.mr, 1);
  EXPECT_EQ(h10.sdim_M, SuperDim(2, 0));
  EXPECT_EQ(h10.sdim_LmodZ, SuperDim(2, 0));
  EXPECT_EQ(h10.nilpotency_class, 2u);

  const auto h01 = report(heisenberg_even(0, 1));
  EXPECT_EQ(h01.smr, (SignedSuperDim{1, 1}));
  EXPECT_EQ(h01.mr, 2);

  const auto sum = report(direct_sum(heisenberg_even(1, 0), abelian(1, 0)));
  EXPECT_EQ(sum.smr, (SignedSuperDim{2, 0}));
  EXPECT_EQ(sum.mr, 2);

  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      EXPECT_EQ(report(abelian(m, n)).smr, (SignedSuperDim{0, 0}));
      EXPECT_EQ(sdr_report(abelian(m, n)).sdr, (SignedSuperDim{0, 0}));
    }
  }
}

TEST(Invariants, SmrFromDimensions) {
  EXPECT_EQ(smr_from(SuperDim(3, 0), SuperDim(2, 0)), (SignedSuperDim{1, 0}));
  EXPECT_EQ(smr_from(SuperDim(1, 1), SuperDim(0, 0)), (SignedSuperDim{1, 1}));
}

TEST(Invariants, DerivedRank) {
  EXPECT_EQ(sdr_report(heisenberg_even(1, 0)).sdr, (SignedSuperDim{0, 0}));
  const auto h1 = sdr_report(heisenberg_odd(1));
  EXPECT_EQ(h1.sdr, (SignedSuperDim{1, 0}));
  EXPECT_EQ(h1.dr, 1);
}

TEST(Invariants, LambdaMu) {
  const auto L4 = model_l4();
  const auto lm = lambda_mu(L4, unit_vec(4, 2));
  EXPECT_EQ(lm.lambda, SuperDim(1, 0));
  EXPECT_EQ(lm.mu, SuperDim(2, 0));
  EXPECT_EQ(report(L4).sdim_LmodZ, SuperDim(3, 0));
  EXPECT_TRUE(lambda_mu_within_bounds(lm, Parity::Even, SuperDim(3, 0)));

  const auto S = direct_sum(heisenberg_even(1, 0), abelian(1, 0));  // u1 v1 z a1
  EXPECT_EQ(second_center(S), Subspace::whole(S));
  EXPECT_EQ(lambda_mu(S, unit_vec(4, 0)).lambda, SuperDim(1, 0));

  const auto T = direct_sum(heisenberg_odd(1), abelian(1, 0));  // u1 a1 | z w1
  const SuperDim mn = (T.sdim() - center(T).sdim()).to_superdim();
  const auto odd = lambda_mu(T, unit_vec(4, 3));
  EXPECT_TRUE(lambda_mu_within_bounds(odd, Parity::Odd, mn));
  EXPECT_TRUE(leq(odd.mu, SuperDim(mn.even(), mn.odd() - 1)));

  EXPECT_THROW(lambda_mu(L4, unit_vec(4, 3)), NotInSecondCenterMinusCenter);  // central
  EXPECT_THROW(lambda_mu(L4, unit_vec(4, 0)), NotInSecondCenterMinusCenter);  // outside Z2
  EXPECT_THROW(lambda_mu(L4, zero_vec(4)), NotInSecondCenterMinusCenter);
  Vec mixed = unit_vec(4, 0);
  mixed[3] = 1;
  EXPECT_THROW(lambda_mu(T, mixed), NonHomogeneous);
}

TEST(Invariants, Bounds) {
  const auto A = check_bounds(abelian(2, 2));
  EXPECT_TRUE(A.all());
  EXPECT_EQ(A.multiplier_margin, (SignedSuperDim{0, 0}));

  // M(H(2,0)) = (5,0) against bound((5,0)) = (10,0).
  const auto H = heisenberg_even(2, 0);
  EXPECT_EQ(report(H).sdim_M, SuperDim(5, 0));
  const auto b = check_bounds(H);
  EXPECT_TRUE(b.all());
  EXPECT_EQ(b.multiplier_margin, (SignedSuperDim{5, 0}));
  EXPECT_TRUE(strictly_less(report(H).sdim_M.as_signed(), bound(H.sdim()).as_signed()));

  for (const auto& [name, L] : model_registry()) EXPECT_TRUE(check_bounds(L).all()) << name;
}

TEST(Invariants, DirectSumFormula) {
  const auto hh = kunneth_check(heisenberg_even(1, 0), heisenberg_even(1, 0));
  EXPECT_EQ(hh.lhs, SuperDim(8, 0));
  EXPECT_EQ(hh.rhs, SuperDim(8, 0));
  const auto ab = kunneth_check(abelian(1, 0), abelian(0, 1));
  EXPECT_EQ(ab.lhs, SuperDim(1, 1));
  EXPECT_TRUE(ab.holds());
  const auto L4 = model_l4();
  const auto z = kunneth_check(L4, abelian(0, 0));
  EXPECT_EQ(z.lhs, report(L4).sdim_M);
  EXPECT_TRUE(z.holds());
}
