#include <gtest/gtest.h>

#include "superschur/algebra.hpp"
#include "superschur/constructions.hpp"
#include "superschur/errors.hpp"

using namespace superschur;

namespace {

constexpr Parity E = Parity::Even;
constexpr Parity O = Parity::Odd;

Vec e(std::size_t n, std::size_t i, long c = 1) {
  Vec v = zero_vec(n);
  v[i] = c;
  return v;
}

}  // namespace

TEST(Validate, HeisenbergOneOneIsValid) {
  // u1 v1 z | w1 with [u1,v1] = z, [w1,w1] = z
  const auto L = LieSuperalgebra::validate("H(1,1)", {E, E, E, O}, {{{0, 1}, e(4, 2)}, {{3, 3}, e(4, 2)}});
  EXPECT_EQ(L.sdim(), SuperDim(3, 1));
  EXPECT_EQ(L.bracket(1, 0), e(4, 2, -1));
  EXPECT_EQ(L.bracket(3, 3), e(4, 2));
  EXPECT_EQ(L.labels(), (std::vector<std::string>{"e0", "e1", "e2", "e3"}));
}

TEST(Validate, OddOddBracketIsSymmetric) {
  // u | z w1 w2 with [w1,w2] = ... must be even; use [w1,w2] = u
  const auto L = LieSuperalgebra::validate("", {E, O, O}, {{{1, 2}, e(3, 0)}});
  EXPECT_EQ(L.bracket(2, 1), e(3, 0));
}

TEST(Validate, AbelianIsValid) {
  const auto L = LieSuperalgebra::validate("Ab", {E, E, O}, {});
  EXPECT_TRUE(L.is_abelian());
  EXPECT_EQ(L.sdim(), SuperDim(2, 1));
}

TEST(Validate, ZeroVectorsAreDropped) {
  const auto L = LieSuperalgebra::validate("", {E, E}, {{{0, 1}, zero_vec(2)}});
  EXPECT_TRUE(L.is_abelian());
}

TEST(Validate, SimpleLieAlgebraPasses) {
  // [x,y]=z, [x,z]=y, [y,z]=x (and the same with [y,z]=2x) satisfy Jacobi.
  EXPECT_NO_THROW(LieSuperalgebra::validate("", {E, E, E},
                                            {{{0, 1}, e(3, 2)}, {{0, 2}, e(3, 1)}, {{1, 2}, e(3, 0)}}));
  EXPECT_NO_THROW(LieSuperalgebra::validate("", {E, E, E},
                                            {{{0, 1}, e(3, 2)}, {{0, 2}, e(3, 1)}, {{1, 2}, e(3, 0, 2)}}));
}

TEST(Validate, JacobiFailureIsReported) {
  // [x,y]=z, [x,z]=x: the cyclic sum on (x,y,z) is -z.
  try {
    LieSuperalgebra::validate("", {E, E, E}, {{{0, 1}, e(3, 2)}, {{0, 2}, e(3, 0)}});
    FAIL() << "expected JacobiError";
  } catch (const JacobiError& err) {
    EXPECT_EQ(err.i(), 0u);
    EXPECT_EQ(err.j(), 1u);
    EXPECT_EQ(err.k(), 2u);
  }
}

TEST(Validate, SuperJacobiFailureOnOddTriple) {
  // u | w with [w,w]=u, [u,w]=w: the (w,w,w) identity gives 3w != 0.
  EXPECT_THROW(LieSuperalgebra::validate("", {E, O}, {{{1, 1}, e(2, 0)}, {{0, 1}, e(2, 1)}}), JacobiError);
}

TEST(Validate, StructuralErrors) {
  EXPECT_THROW(LieSuperalgebra::validate("", {E, E, O}, {{{0, 1}, e(3, 2)}}), GradingError);
  EXPECT_THROW(LieSuperalgebra::validate("", {E, E}, {{{0, 0}, e(2, 1)}}), SkewSymmetryError);
  EXPECT_THROW(LieSuperalgebra::validate("", {O, E}, {}), BasisOrderError);
  EXPECT_THROW(LieSuperalgebra::validate("", {E, E}, {{{1, 0}, e(2, 1)}}), ValidationError);
  EXPECT_THROW(LieSuperalgebra::validate("", {E, E}, {{{0, 1}, e(3, 1)}}), ValidationError);
  EXPECT_THROW(LieSuperalgebra::validate("", {E, E}, {}, {"a", "a"}), ValidationError);
}

TEST(Algebra, BracketOfVectorsIsBilinear) {
  const auto H = heisenberg_even(1, 0);  // u1 v1 z
  Vec x = e(3, 0, 2);
  x[1] = 1;
  const Vec y = e(3, 1, 3);
  EXPECT_EQ(H.bracket(x, y), e(3, 2, 6));
  EXPECT_EQ(H.bracket(y, x), e(3, 2, -6));
}

TEST(Algebra, HomogeneousParity) {
  const auto H = heisenberg_even(0, 1);  // z | w1
  EXPECT_EQ(homogeneous_parity(H, e(2, 0)), Parity::Even);
  EXPECT_EQ(homogeneous_parity(H, e(2, 1)), Parity::Odd);
  EXPECT_FALSE(homogeneous_parity(H, zero_vec(2)).has_value());
  Vec mixed = e(2, 0);
  mixed[1] = 1;
  EXPECT_FALSE(homogeneous_parity(H, mixed).has_value());
}

TEST(Algebra, IdentityAndStructure) {
  const auto A = heisenberg_odd(1);
  const auto B = A.renamed("copy");
  EXPECT_FALSE(A.same_as(B));
  EXPECT_TRUE(A.same_structure(B));
  EXPECT_TRUE(A.same_as(A));
  EXPECT_EQ(sign(O, O), -1);
  EXPECT_EQ(sign(E, O), 1);
  EXPECT_EQ(O + O, E);
}
