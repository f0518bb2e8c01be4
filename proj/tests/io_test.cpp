#include <gtest/gtest.h>

#include "superschur/constructions.hpp"
#include "superschur/corpus.hpp"
#include "superschur/errors.hpp"
#include "superschur/io.hpp"

using namespace superschur;

namespace {

const char* kH11 =
    "# the even-center Heisenberg superalgebra H(1,1)\n"
    "algebra \"H(1,1)\"\n"
    "even u1 v1 z\n"
    "odd  w1\n"
    "[u1,v1] = z\n"
    "[w1,w1] = z   # odd square\n";

template <typename E>
E expect_parse_error(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const E& e) {
    return e;
  } catch (const std::exception& e) {
    ADD_FAILURE() << "wrong error: " << e.what();
    throw;
  }
  ADD_FAILURE() << "no error for: " << text;
  throw std::logic_error("unreachable");
}

}  // namespace

TEST(Parse, HeisenbergFile) {
  const auto L = parse_algebra(kH11);
  EXPECT_EQ(L.name(), "H(1,1)");
  EXPECT_EQ(L.sdim(), SuperDim(3, 1));
  EXPECT_TRUE(L.same_structure(heisenberg_even(1, 1)));
}

TEST(Parse, EmptySectionsGiveZeroAlgebra) {
  EXPECT_EQ(parse_algebra("even\nodd\n").dim(), 0u);
  EXPECT_EQ(parse_algebra("").dim(), 0u);
  EXPECT_EQ(parse_algebra("# nothing\n\n").dim(), 0u);
}

TEST(Parse, Coefficients) {
  const auto L = parse_algebra(
      "even x y z t\n"
      "[x,y] = 2 z - 1/2 t\n"
      "[x,z] = -3/6 t\n");
  Vec xy = zero_vec(4);
  xy[2] = 2;
  xy[3] = make_scalar(-1, 2);
  EXPECT_EQ(L.bracket(0, 1), xy);
  Vec xz = zero_vec(4);
  xz[3] = make_scalar(-1, 2);
  EXPECT_EQ(L.bracket(0, 2), xz);
}

TEST(Parse, ReversedBracketsAreNormalized) {
  const auto even = parse_algebra("even u v z\n[v,u] = z\n");
  EXPECT_EQ(even.bracket(0, 1), scaled(unit_vec(3, 2), -1));
  const auto odd = parse_algebra("even z\nodd a b\n[b,a] = z\n");
  EXPECT_EQ(odd.bracket(1, 2), unit_vec(3, 0));
  // consistent duplicates are accepted
  EXPECT_NO_THROW(parse_algebra("even u v z\n[u,v] = z\n[v,u] = -z\n"));
  EXPECT_NO_THROW(parse_algebra("even u v z\n[u,v] = 0\n"));
}

TEST(Parse, InconsistentBrackets) {
  expect_parse_error<InconsistentBracket>("even u v z\n[u,v] = z\n[v,u] = z\n");
  expect_parse_error<InconsistentBracket>("even u v z\n[u,v] = z\n[u,v] = 2 z\n");
  expect_parse_error<InconsistentBracket>("even u z\n[u,u] = z\n");
}

TEST(Parse, IdentifierErrors) {
  const auto dup = expect_parse_error<DuplicateIdentifier>("even a b\nodd a\n");
  EXPECT_EQ(dup.line(), 2u);
  EXPECT_EQ(dup.column(), 5u);
  const auto unk = expect_parse_error<UnknownIdentifier>("even a b\n[a,b] = c\n");
  EXPECT_EQ(unk.line(), 2u);
  EXPECT_EQ(unk.column(), 9u);
  expect_parse_error<UnknownIdentifier>("even a b\n[a,q] = b\n");
}

TEST(Parse, SyntaxErrors) {
  const auto e = expect_parse_error<SyntaxError>("even a b\n[a b] = a\n");
  EXPECT_EQ(e.line(), 2u);
  expect_parse_error<SyntaxError>("even a b c\n[a,b] = 1/0 c\n");
  expect_parse_error<SyntaxError>("even a b c\n[a,b] = c +\n");
  expect_parse_error<SyntaxError>("even a b c\n[a,b] c\n");
  expect_parse_error<SyntaxError>("algebra \"unterminated\n");
  expect_parse_error<SyntaxError>("even a\neven b\n");
  expect_parse_error<SyntaxError>("even a b c\n[a,b] = c\nodd d\n");
  expect_parse_error<SyntaxError>("bogus line\n");
  expect_parse_error<SyntaxError>("even 1a\n");
}

TEST(Parse, ValidationErrorsPassThrough) {
  EXPECT_THROW(parse_algebra("even x y z\n[x,y] = z\n[x,z] = x\n"), JacobiError);
  EXPECT_THROW(parse_algebra("even a b\nodd c\n[a,b] = c\n"), GradingError);
}

TEST(Emit, CanonicalForm) {
  const std::string canonical =
      "algebra \"H(1,1)\"\n"
      "even u1 v1 z\n"
      "odd w1\n"
      "[u1,v1] = z\n"
      "[w1,w1] = z\n";
  EXPECT_EQ(emit_algebra(parse_algebra(kH11)), canonical);
  EXPECT_EQ(emit_algebra(parse_algebra(canonical)), canonical);
  const std::string terms =
      "algebra \"\"\n"
      "even x y z t\n"
      "odd\n"
      "[x,y] = -z + 1/2 t\n"
      "[x,z] = 2 t\n";
  EXPECT_EQ(emit_algebra(parse_algebra(terms)), terms);
}

TEST(Emit, RoundTripOnCorpus) {
  for (const auto& L : random_corpus(21, 40)) {
    const std::string text = emit_algebra(L);
    const auto back = parse_algebra(text);
    EXPECT_TRUE(back.same_structure(L)) << text;
    EXPECT_EQ(back.labels(), L.labels());
    EXPECT_EQ(emit_algebra(back), text);
  }
  for (const auto& [name, L] : model_registry()) {
    EXPECT_EQ(emit_algebra(parse_algebra(emit_algebra(L))), emit_algebra(L)) << name;
  }
}
