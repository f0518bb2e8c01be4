#include <gtest/gtest.h>

#include <set>

#include "superschur/classify.hpp"
#include "superschur/constructions.hpp"
#include "superschur/errors.hpp"
#include "superschur/structure.hpp"
#include "superschur/subspace.hpp"

using namespace superschur;

namespace {

Vec e(std::size_t n, std::size_t i, long c = 1) {
  Vec v = zero_vec(n);
  v[i] = c;
  return v;
}

}  // namespace

TEST(Subspace, SpanIsCanonical) {
  const auto L = abelian(3, 1);
  const auto a = Subspace::span(L, {e(4, 0, 2), e(4, 1)});
  Vec s = e(4, 0);
  s[1] = 1;
  const auto b = Subspace::span(L, {s, e(4, 1, -3)});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.sdim(), SuperDim(2, 0));
  Vec mixed = e(4, 0);
  mixed[3] = 1;
  EXPECT_THROW(Subspace::span(L, {mixed}), NonHomogeneous);
  const auto closure = Subspace::homogeneous_closure(L, {mixed});
  EXPECT_EQ(closure.sdim(), SuperDim(1, 1));
  EXPECT_TRUE(Subspace::zero(L).is_zero());
  EXPECT_EQ(Subspace::whole(L).sdim(), SuperDim(3, 1));
}

TEST(Subspace, SumAndIntersection) {
  const auto L = abelian(3, 0);
  const auto a = Subspace::span(L, {e(3, 0), e(3, 1)});
  const auto b = Subspace::span(L, {e(3, 1), e(3, 2)});
  EXPECT_EQ((a + b), Subspace::whole(L));
  EXPECT_EQ(a.intersect(b), Subspace::span(L, {e(3, 1)}));
  EXPECT_TRUE(a.intersect(b).is_subspace_of(a));
  EXPECT_TRUE(a.contains(e(3, 0, 5)));
  EXPECT_FALSE(a.contains(e(3, 2)));
  const auto other = abelian(3, 0);
  EXPECT_THROW(a.is_subspace_of(Subspace::whole(other)), ParentMismatch);
}

TEST(Structure, BracketSubspaces) {
  const auto H = heisenberg_even(1, 0);
  EXPECT_EQ(bracket_subspaces(H, Subspace::whole(H), Subspace::whole(H)), Subspace::span(H, {e(3, 2)}));
  EXPECT_TRUE(bracket_subspaces(H, Subspace::whole(H), Subspace::zero(H)).is_zero());
  const auto L4 = model_l4();  // x y z t
  EXPECT_EQ(bracket_subspaces(L4, Subspace::whole(L4), Subspace::whole(L4)),
            Subspace::span(L4, {e(4, 2), e(4, 3)}));
}

TEST(Structure, DerivedSubalgebra) {
  EXPECT_EQ(derived_subalgebra(heisenberg_even(2, 3)).sdim(), SuperDim(1, 0));
  EXPECT_EQ(derived_subalgebra(abelian(4, 2)).sdim(), SuperDim(0, 0));
  EXPECT_EQ(derived_subalgebra(heisenberg_odd(3)).sdim(), SuperDim(0, 1));
}

TEST(Structure, Center) {
  for (std::size_t p = 0; p <= 2; ++p) {
    for (std::size_t q = 0; q <= 2; ++q) {
      if (p + q == 0) continue;
      const auto H = heisenberg_even(p, q);
      EXPECT_EQ(center(H), Subspace::span(H, {e(H.dim(), 2 * p)})) << p << "," << q;
    }
  }
  const auto A = abelian(2, 3);
  EXPECT_EQ(center(A), Subspace::whole(A));
  const auto L4 = model_l4();
  EXPECT_EQ(center(L4), Subspace::span(L4, {e(4, 3)}));
  EXPECT_EQ(center(heisenberg_odd(3)).sdim(), SuperDim(0, 1));
}

TEST(Structure, Centralizer) {
  const auto H = heisenberg_even(1, 0);
  EXPECT_EQ(centralizer(H, e(3, 0)), Subspace::span(H, {e(3, 0), e(3, 2)}));
  EXPECT_EQ(centralizer(H, e(3, 2)), Subspace::whole(H));
  const auto K = heisenberg_odd(1);  // u1 | z w1
  const auto c = centralizer(K, e(3, 2));
  EXPECT_EQ(c.sdim(), SuperDim(0, 2));
  EXPECT_EQ(bracket_with(K, e(3, 2)).sdim(), pi_swap((K.sdim() - c.sdim()).to_superdim()));
  Vec mixed = e(3, 0);
  mixed[1] = 1;
  EXPECT_THROW(centralizer(K, mixed), NonHomogeneous);
}

TEST(Structure, SecondCenter) {
  const auto L4 = model_l4();
  EXPECT_EQ(second_center(L4), Subspace::span(L4, {e(4, 2), e(4, 3)}));
  const auto A = abelian(1, 2);
  EXPECT_EQ(second_center(A), Subspace::whole(A));
  const auto H = heisenberg_even(1, 0);
  EXPECT_EQ(second_center(H), Subspace::whole(H));
}

TEST(Structure, LowerCentralSeries) {
  EXPECT_EQ(nilpotency_class(heisenberg_even(2, 1)), 2u);
  EXPECT_EQ(nilpotency_class(heisenberg_odd(2)), 2u);
  EXPECT_EQ(nilpotency_class(abelian(1, 1)), 1u);
  EXPECT_EQ(nilpotency_class(abelian(0, 0)), 0u);
  const auto L4 = model_l4();
  EXPECT_EQ(nilpotency_class(L4), 3u);
  const auto series = lower_central_series(L4);
  ASSERT_EQ(series.size(), 4u);
  EXPECT_EQ(series[0].sdim(), SuperDim(4, 0));
  EXPECT_EQ(series[1].sdim(), SuperDim(2, 0));
  EXPECT_EQ(series[2].sdim(), SuperDim(1, 0));
  EXPECT_TRUE(series[3].is_zero());
}

TEST(Structure, NonNilpotentAlgebra) {
  // [x,y] = y is solvable but not nilpotent.
  const auto L = LieSuperalgebra::validate("", {Parity::Even, Parity::Even}, {{{0, 1}, e(2, 1)}});
  EXPECT_FALSE(is_nilpotent(L));
  EXPECT_FALSE(nilpotency_class(L).has_value());
  const auto series = lower_central_series(L);
  EXPECT_FALSE(series.back().is_zero());
  EXPECT_THROW(classify_mr_le2(L), NotNilpotent);
}

TEST(Structure, Quotients) {
  const auto H = heisenberg_even(1, 0);
  const auto Q = quotient(H, center(H));
  EXPECT_EQ(Q.algebra().sdim(), SuperDim(2, 0));
  EXPECT_TRUE(Q.algebra().is_abelian());
  EXPECT_EQ(quotient(H, Subspace::whole(H)).algebra().dim(), 0u);
  EXPECT_THROW(quotient(H, Subspace::span(H, {e(3, 0)})), NotAnIdeal);

  const auto L4 = model_l4();
  const auto R = quotient(L4, Subspace::span(L4, {e(4, 3)}));
  EXPECT_EQ(fingerprint(R.algebra()), fingerprint(heisenberg_even(1, 0)));
  EXPECT_EQ(R.project(e(4, 3)), zero_vec(3));
  EXPECT_EQ(R.project(R.lift(e(3, 1))), e(3, 1));
  EXPECT_EQ(R.preimage(Subspace::zero(R.algebra())), Subspace::span(L4, {e(4, 3)}));
  EXPECT_EQ(R.project(Subspace::whole(L4)), Subspace::whole(R.algebra()));
}

TEST(Structure, Ideals) {
  const auto L4 = model_l4();
  EXPECT_TRUE(is_ideal(L4, derived_subalgebra(L4)));
  EXPECT_TRUE(is_ideal(L4, center(L4)));
  EXPECT_FALSE(is_ideal(L4, Subspace::span(L4, {e(4, 1)})));
}

TEST(Structure, DirectSums) {
  const auto A = direct_sum(heisenberg_even(1, 0), abelian(1, 0));
  EXPECT_EQ(A.sdim(), SuperDim(4, 0));
  EXPECT_EQ(derived_subalgebra(A).sdim(), SuperDim(1, 0));
  EXPECT_EQ(center(A).sdim(), SuperDim(2, 0));
  EXPECT_EQ(direct_sum(heisenberg_even(1, 0), abelian(0, 1)).sdim(), SuperDim(3, 1));

  const auto H = heisenberg_odd(1);
  const auto S = direct_sum(H, abelian(0, 0));
  EXPECT_EQ(S.sdim(), H.sdim());
  EXPECT_EQ(S.constants(), H.constants());

  const auto ds = direct_sum_with_embedding(heisenberg_odd(1), heisenberg_even(1, 0));
  // even parts first, then odd parts; labels of the second summand are made unique
  EXPECT_EQ(ds.first_index, (std::vector<std::size_t>{0, 4, 5}));
  EXPECT_EQ(ds.second_index, (std::vector<std::size_t>{1, 2, 3}));
  const auto& labels = ds.algebra.labels();
  EXPECT_EQ(std::set<std::string>(labels.begin(), labels.end()).size(), labels.size());
}

TEST(Structure, ChangeOfBasis) {
  const auto H = heisenberg_even(1, 0);
  Matrix id(3, zero_vec(3));
  for (std::size_t i = 0; i < 3; ++i) id[i][i] = 1;
  EXPECT_EQ(change_basis(H, id).constants(), H.constants());

  Matrix P = id;
  P[0][0] = 2;  // u1 -> 2 u1
  const auto H2 = change_basis(H, P);
  EXPECT_EQ(H2.bracket(0, 1), e(3, 2, 2));

  const auto K = heisenberg_odd(1);
  Matrix mix(3, zero_vec(3));
  for (std::size_t i = 0; i < 3; ++i) mix[i][i] = 1;
  mix[0][1] = 1;
  EXPECT_THROW(change_basis(K, mix), ParityMixing);
  Matrix sing(3, zero_vec(3));
  sing[0][0] = 1;
  EXPECT_THROW(change_basis(K, sing), SingularMatrix);
  EXPECT_THROW(change_basis(K, Matrix(2, zero_vec(2))), InvalidParams);
}

TEST(Structure, DefiningPairRequiresCentralDerivedKernel) {
  const auto H = heisenberg_even(1, 0);
  EXPECT_NO_THROW(DefiningPair::make(H, center(H)));
  EXPECT_THROW(DefiningPair::make(H, Subspace::span(H, {e(3, 0)})), InvalidParams);
  const auto A = abelian(1, 0);
  EXPECT_THROW(DefiningPair::make(A, Subspace::whole(A)), InvalidParams);
  const auto pair = DefiningPair::make(H, center(H));
  EXPECT_TRUE(pair.base().algebra().is_abelian());
}
