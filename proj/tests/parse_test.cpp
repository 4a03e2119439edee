#include "glnz/parse.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace glnz;
using testutil::q;

TEST(ParseRat, Grammar) {
  EXPECT_EQ(parse_rat("2/5"), q(2, 5));
  EXPECT_EQ(parse_rat("-3"), Rat(-3));
  EXPECT_EQ(parse_rat(" 4/6 "), q(2, 3));  // canonicalized
  EXPECT_THROW(parse_rat("1/0"), ParseError);
  EXPECT_THROW(parse_rat("2/5x"), ParseError);
  EXPECT_THROW(parse_rat(""), ParseError);
}

TEST(ParsePoint, RationalPoints) {
  SymBasis none;
  SymPoint p = parse_point("1/2, -3, 0", none);
  ASSERT_EQ(p.n(), 3u);
  EXPECT_EQ(p.coords[0], (RatVec{q(1, 2)}));
  EXPECT_EQ(p.coords[1], (RatVec{Rat(-3)}));
  EXPECT_EQ(p.coords[2], (RatVec{Rat(0)}));
}

TEST(ParsePoint, SymbolicPoints) {
  SymBasis b{{"r2"}, {1.414}};
  SymPoint p = parse_point("r2, 1 + r2", b);
  ASSERT_EQ(p.n(), 2u);
  EXPECT_EQ(p.coords[0], (RatVec{Rat(0), Rat(1)}));
  EXPECT_EQ(p.coords[1], (RatVec{Rat(1), Rat(1)}));

  SymPoint p2 = parse_point("1/2 - 3/4*r2, -r2", b);
  EXPECT_EQ(p2.coords[0], (RatVec{q(1, 2), q(-3, 4)}));
  EXPECT_EQ(p2.coords[1], (RatVec{Rat(0), Rat(-1)}));

  EXPECT_THROW(parse_point("r3", b), UnknownSymbol);
  EXPECT_THROW(parse_point("1 +", b), ParseError);
  EXPECT_THROW(parse_point("1, 2,", b), ParseError);
}

TEST(ParseEquation, LinearEquations) {
  auto [h1, r1] = parse_equation("5*y2 = 3", 2);
  EXPECT_EQ(h1, (RatVec{Rat(0), Rat(5)}));
  EXPECT_EQ(r1, Rat(3));

  auto [h2, r2] = parse_equation("y1 - y2 = -1", 2);
  EXPECT_EQ(h2, (RatVec{Rat(1), Rat(-1)}));
  EXPECT_EQ(r2, Rat(-1));

  // variables and constants on both sides
  auto [h3, r3] = parse_equation("y1 + 1 = y2 + 1/2", 2);
  EXPECT_EQ(h3, (RatVec{Rat(1), Rat(-1)}));
  EXPECT_EQ(r3, q(-1, 2));

  auto [h4, r4] = parse_equation("1/2*y1 = 0", 1);
  EXPECT_EQ(h4, (RatVec{q(1, 2)}));

  EXPECT_THROW(parse_equation("y3 = 0", 2), ParseError);
  EXPECT_THROW(parse_equation("y1 + 2", 2), ParseError);
}

TEST(Format, PointRoundTrip) {
  SymBasis b{{"r2", "r3"}, {1.414, 1.732}};
  SymPoint p = sym_point(b, {{RatVec{q(1, 2), Rat(-1), Rat(0)}},
                             {RatVec{Rat(0), Rat(0), q(3, 7)}},
                             {RatVec{Rat(0), Rat(0), Rat(0)}}});
  std::string s = format_point(p);
  EXPECT_EQ(parse_point(s, b), p);
  EXPECT_EQ(format_point(parse_point("0, -r2, 5", b)),
            format_point(parse_point("0, -1*r2, 5", b)));
}
