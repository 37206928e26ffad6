// Copyright 2026 The QIC Authors
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

#include "qic/hierarchy.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qic/basis.hpp"
#include "qic/errors.hpp"

using namespace qic;

namespace {
const std::vector<std::string> kQic{"00"};
const std::vector<std::string> kPlastic{"00", "111"};
}  // namespace

TEST(ConstrainedDimension, SpecExamples) {
  EXPECT_EQ(constrained_dimension(5, kQic), 13U);
  // Brute force: 0101, 0110, 1010, 1011, 1101.
  EXPECT_EQ(constrained_dimension(4, kPlastic), 5U);
  EXPECT_EQ(oracle::brute_force_count(4, kPlastic), 5U);
  EXPECT_EQ(constrained_dimension(1, kQic), 2U);
}

TEST(ConstrainedDimension, MatchesBruteForceOnWordSets) {
  const std::vector<std::vector<std::string>> sets{
      kQic, kPlastic, {"00", "111", "01010"}, {"11"}, {"010", "0110"}, {"00", "11"}, {"101", "10", "0000"}};
  for (const auto& set : sets) {
    for (int n = 1; n <= 14; ++n) {
      EXPECT_EQ(constrained_dimension(n, set), oracle::brute_force_count(n, set)) << "N=" << n;
    }
  }
}

TEST(ConstrainedDimension, AgreesWithExplicitEnumeration) {
  for (int n = 1; n <= 16; ++n) EXPECT_EQ(constrained_dimension(n, kQic), enumerate_basis(n).size());
}

TEST(ConstrainedDimension, RejectsBadWordSets) {
  EXPECT_THROW(constrained_dimension(4, std::vector<std::string>{}), Error);
  EXPECT_THROW(constrained_dimension(4, std::vector<std::string>{"0"}), Error);
  EXPECT_THROW(constrained_dimension(4, std::vector<std::string>{"0a"}), ParseError);
}

TEST(ConstrainedDimension, DetectsOverflow) {
  EXPECT_NO_THROW(constrained_dimension(90, kQic));
  EXPECT_THROW(constrained_dimension(200, std::vector<std::string>{"0000000000"}), BoundsError);
}

TEST(GrowthRate, GoldenRatioForNoAdjacentZeros) {
  EXPECT_NEAR(growth_rate_estimate(kQic, 30), std::numbers::phi, 1e-6);
}

TEST(GrowthRate, PlasticRatio) {
  EXPECT_NEAR(growth_rate_estimate(kPlastic, 40), 1.3247, 1e-2);
}

TEST(GrowthRate, AlternatingStringsOnly) {
  EXPECT_DOUBLE_EQ(growth_rate_estimate(std::vector<std::string>{"00", "11"}, 20), 1.0);
}

TEST(GrowthRate, Errors) {
  EXPECT_THROW(growth_rate_estimate(kQic, 9), BoundsError);
  // Every string of length >= 2 contains one of these.
  EXPECT_THROW(growth_rate_estimate(std::vector<std::string>{"00", "01", "10", "11"}, 12), ZeroDimensionError);
}

TEST(ParseForbiddenWords, CommaAndSpace) {
  EXPECT_EQ(parse_forbidden_words("00,111"), kPlastic);
  EXPECT_EQ(parse_forbidden_words(" 00  111 "), kPlastic);
  EXPECT_THROW(parse_forbidden_words(" , "), ParseError);
}
