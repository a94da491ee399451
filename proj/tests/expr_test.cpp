#include "svir/expr.hpp"

#include <gtest/gtest.h>

#include <random>

#include "svir/errors.hpp"
#include "svir/two_local.hpp"

namespace svir {
namespace {

Element e(Family f, Kind k, std::int64_t i = 0) { return Element(make_basis(f, k, i)); }

TEST(ParseElement, Examples) {
  const Family s0 = Family::SVir0, w = Family::SW22;
  EXPECT_EQ(parse_element("L[3]", s0), e(s0, Kind::L, 3));
  EXPECT_EQ(parse_element("2*L[0] + 1/4*C", s0), Rational(2) * e(s0, Kind::L, 0) + Rational(1, 4) * e(s0, Kind::C));
  EXPECT_EQ(parse_element("-G[-2] - 3*L[1]", s0), -e(s0, Kind::G, -2) - Rational(3) * e(s0, Kind::L, 1));
  EXPECT_EQ(parse_element("-1/2*G[1]", s0), Rational(-1, 2) * e(s0, Kind::G, 1));
  EXPECT_EQ(parse_element("I[0]+Q[0]", w), e(w, Kind::I, 0) + e(w, Kind::Q, 0));
  EXPECT_EQ(parse_element("C1 + 3*C2", w), e(w, Kind::C1) + Rational(3) * e(w, Kind::C2));
  EXPECT_EQ(parse_element("G[-3/2]", Family::SVir12),
            Element(make_basis(Family::SVir12, Kind::G, HalfInt::from_twice(-3))));
  EXPECT_EQ(parse_element("3*L[2] + 1/2*G[-1] - C1", w),
            Rational(3) * e(w, Kind::L, 2) + Rational(1, 2) * e(w, Kind::G, -1) - e(w, Kind::C1));
  EXPECT_EQ(parse_element("G[3/2]", Family::SVir12),
            Element(make_basis(Family::SVir12, Kind::G, HalfInt::from_twice(3))));
  EXPECT_TRUE(parse_element("L[1] - L[1]", Family::Vir).is_zero());
  EXPECT_TRUE(parse_element("0", s0).is_zero());
  EXPECT_TRUE(parse_element("L[1] - L[1]", s0).is_zero());
}

TEST(ParseElement, Errors) {
  const Family s0 = Family::SVir0;
  EXPECT_THROW(parse_element("", s0), SyntaxError);
  EXPECT_THROW(parse_element("L[", s0), SyntaxError);
  EXPECT_THROW(parse_element("L[1] +", s0), SyntaxError);
  EXPECT_THROW(parse_element("X[1]", s0), SyntaxError);
  EXPECT_THROW(parse_element("2*", s0), SyntaxError);
  EXPECT_THROW(parse_element("L[2/2]", s0), SyntaxError);
  EXPECT_THROW(parse_element("1/0*L[1]", s0), SyntaxError);
  EXPECT_THROW(parse_element("D", Family::SW22), SyntaxError);
  EXPECT_THROW(parse_element("I[1]", s0), KindNotInFamily);
  EXPECT_THROW(parse_element("Q[0]", s0), KindNotInFamily);
  EXPECT_THROW(parse_element("G[1/2]", s0), IndexNotInSector);
  EXPECT_THROW(parse_element("G[1]", Family::SVir12), IndexNotInSector);
  try {
    parse_element("L[1] + ?", s0);
    FAIL();
  } catch (const SyntaxError& err) {
    EXPECT_EQ(err.position(), 7u);
  }
}

TEST(ParseDerivation, OuterOnlyInSuperW22) {
  const Family w = Family::SW22;
  EXPECT_EQ(parse_derivation("I[2] + 3*D", w), SuperDerivation(e(w, Kind::I, 2), Rational(3)));
  EXPECT_EQ(parse_derivation("-D", w), SuperDerivation::outer(Rational(-1)));
  EXPECT_EQ(parse_derivation("L[1]+G[0]", Family::SVir0),
            SuperDerivation::inner_of(e(Family::SVir0, Kind::L, 1) + e(Family::SVir0, Kind::G, 0)));
  EXPECT_THROW(parse_derivation("D", Family::SVir0), KindNotInFamily);
}

TEST(Format, CanonicalText) {
  const Family s0 = Family::SVir0, w = Family::SW22;
  EXPECT_EQ(format_element(bracket(e(s0, Kind::G, 1), e(s0, Kind::G, -1))), "2*L[0] + 1/4*C");
  EXPECT_EQ(format_element(Element(s0)), "0");
  EXPECT_EQ(format_element(e(s0, Kind::G, 2) - e(s0, Kind::L, 5)), "-L[5] + G[2]");
  EXPECT_EQ(format_element(Element(make_basis(Family::SVir12, Kind::G, HalfInt::from_twice(-1)), Rational(-3, 2))),
            "-3/2*G[-1/2]");
  EXPECT_EQ(format_derivation(SuperDerivation(e(w, Kind::Q, -1), Rational(-2))), "Q[-1] - 2*D");
  EXPECT_EQ(format_derivation(SuperDerivation::outer(Rational(1))), "D");
  EXPECT_EQ(format_derivation(SuperDerivation(w)), "0");
}

TEST(Format, RoundTripOnRandomElements) {
  std::mt19937_64 rng(1234);
  for (Family f : {Family::Vir, Family::SVir0, Family::SVir12, Family::SW22}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Element x = random_element(f, Rational(6), rng);
      const Element y = Rational(static_cast<std::int64_t>(rng() % 13) - 6, 1 + rng() % 5) * x;
      EXPECT_EQ(parse_element(format_element(x), f), x);
      EXPECT_EQ(parse_element(format_element(y), f), y);
      const SuperDerivation d(x, f == Family::SW22 ? Rational(static_cast<std::int64_t>(rng() % 5) - 2) : Rational(0));
      EXPECT_EQ(parse_derivation(format_derivation(d), f), d);
    }
  }
}

}  // namespace
}  // namespace svir
