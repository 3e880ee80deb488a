// Copyright 2026 The GCSB Authors
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

#include "gcsb/rational.h"

#include <vector>

#include "gcsb/errors.h"
#include "gtest/gtest.h"

namespace gcsb {
namespace {

TEST(RationalTest, FormatsIntegersWithoutDenominator) {
  EXPECT_EQ(ToString(Rational(6, 3)), "2");
  EXPECT_EQ(ToString(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(ToString(Rational(0)), "0");
}

TEST(RationalTest, ParsesFractionsAndDecimals) {
  EXPECT_EQ(ParseRational("3/4"), Rational(3, 4));
  EXPECT_EQ(ParseRational("-10/4"), Rational(-5, 2));
  EXPECT_EQ(ParseRational("7"), Rational(7));
  EXPECT_EQ(ParseRational("0.25"), Rational(1, 4));
  EXPECT_EQ(ParseRational(".5"), Rational(1, 2));
  EXPECT_THROW(ParseRational("1/0"), SchemaError);
  EXPECT_THROW(ParseRational("abc"), SchemaError);
  EXPECT_THROW(ParseRational(""), SchemaError);
  EXPECT_THROW(ParseRational("1/2/3"), SchemaError);
}

TEST(RationalTest, ScalesToCoprimeIntegers) {
  std::vector<Rational> v = {Rational(3, 2), Rational(3, 4), Rational(0)};
  const Rational factor = ScaleToCoprimeIntegers(v);
  EXPECT_EQ(factor, Rational(4, 3));
  EXPECT_EQ(v[0], 2);
  EXPECT_EQ(v[1], 1);
  EXPECT_EQ(v[2], 0);

  std::vector<Rational> zeros = {0, 0};
  EXPECT_EQ(ScaleToCoprimeIntegers(zeros), 1);
}

TEST(RationalTest, Combinatorics) {
  EXPECT_EQ(Binomial(5, 2), 10);
  EXPECT_EQ(Binomial(3, 4), 0);
  EXPECT_EQ(Factorial(5), 120);
  EXPECT_EQ(Factorial(0), 1);
}

}  // namespace
}  // namespace gcsb
