// Copyright 2026 The symgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "symgames/rational.h"

namespace symgames {
namespace {

TEST(FractionTest, ReducesToLowestTerms) {
  const Rational r = Fraction(6, 4);
  EXPECT_EQ(r.get_num(), 3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(Fraction(2, -4), Fraction(-1, 2));
  EXPECT_EQ(Fraction(0, 7), 0);
  EXPECT_THROW(Fraction(1, 0), InvalidArgument);
}

TEST(FractionTest, SumsOfReducedValuesCompareExactly) {
  Rational total = 0;
  for (int i = 0; i < 10; ++i) total += Fraction(10, 100);
  EXPECT_EQ(total, 1);
}

TEST(ParseRationalTest, Fractions) {
  EXPECT_EQ(ParseRational("3/4"), Fraction(3, 4));
  EXPECT_EQ(ParseRational(" -10/4 "), Fraction(-5, 2));
  EXPECT_EQ(ParseRational("7"), 7);
  EXPECT_THROW(ParseRational("1/0"), InvalidArgument);
}

TEST(ParseRationalTest, DecimalsAreExact) {
  EXPECT_EQ(ParseRational("0.1"), Fraction(1, 10));
  EXPECT_EQ(ParseRational("-2.50"), Fraction(-5, 2));
  EXPECT_EQ(ParseRational("1e-3"), Fraction(1, 1000));
  EXPECT_EQ(ParseRational(".5"), Fraction(1, 2));
  EXPECT_EQ(ParseRational("1.25E2"), 125);
}

TEST(ParseRationalTest, RejectsGarbage) {
  for (const char* bad : {"", "abc", "1/2/3", "1.2.3", "--1", "/3"}) {
    EXPECT_THROW(ParseRational(bad), InvalidArgument) << bad;
  }
}

TEST(FormatRationalTest, RoundTrips) {
  for (const Rational& q : {Fraction(-7, 3), Rational(5), Fraction(1, 1000)}) {
    EXPECT_EQ(ParseRational(FormatRational(q)), q);
  }
  EXPECT_EQ(FormatRational(Fraction(4, 2)), "2");
}

TEST(ExactFromDoubleTest, IsTheBinaryValue) {
  EXPECT_EQ(ExactFromDouble(0.5), Fraction(1, 2));
  EXPECT_NE(ExactFromDouble(0.1), Fraction(1, 10));
  EXPECT_EQ(ToDouble(ExactFromDouble(0.1)), 0.1);
}

TEST(MatrixTest, SymmetryPredicates) {
  const RationalMatrix s{{1, 2}, {2, 3}};
  const RationalMatrix k{{0, 1}, {-1, 0}};
  EXPECT_TRUE(IsSymmetric(s));
  EXPECT_FALSE(IsSkewSymmetric(s));
  EXPECT_TRUE(IsSkewSymmetric(k));
  EXPECT_FALSE(IsSymmetric(k));
  EXPECT_EQ(MinEntry(s), 1);
  EXPECT_EQ(MaxEntry(k), 1);
}

TEST(MatrixTest, ArithmeticAndProducts) {
  const RationalMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(a + a, Rational(2) * a);
  EXPECT_EQ(a - a, RationalMatrix(2, 2));
  EXPECT_EQ(-a, Rational(-1) * a);
  EXPECT_EQ(Shifted(a, -1), (RationalMatrix{{0, 1}, {2, 3}}));
  const std::vector<Rational> x{Fraction(1, 2), Fraction(1, 2)};
  EXPECT_EQ(Multiply(a, x), (std::vector<Rational>{Fraction(3, 2), Fraction(7, 2)}));
  EXPECT_EQ(MultiplyTransposed(a, x), (std::vector<Rational>{2, 3}));
  EXPECT_EQ(Dot(x, x), Fraction(1, 2));
  EXPECT_THROW(a + RationalMatrix(3, 2), DimensionError);
}

TEST(MatrixTest, RaggedLiteralIsRejected) {
  EXPECT_THROW((RationalMatrix{{1, 2}, {3}}), DimensionError);
}

}  // namespace
}  // namespace symgames
