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

#include "qic/basis.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "qic/constants.hpp"
#include "qic/errors.hpp"

using namespace qic;

namespace {

std::vector<std::string> strings_of(const QicBasis& basis) {
  std::vector<std::string> out;
  for (const auto& w : basis.codewords()) out.push_back(w.str());
  return out;
}

}  // namespace

TEST(Codeword, ParseRejectsAdjacentZeros) {
  EXPECT_NO_THROW(Codeword::parse("101"));
  EXPECT_THROW(Codeword::parse("1001"), ParseError);
  EXPECT_THROW(Codeword::parse("12"), ParseError);
  EXPECT_THROW(Codeword::parse(""), ParseError);
  EXPECT_TRUE(Codeword::is_valid("0"));
  EXPECT_FALSE(Codeword::is_valid("00"));
}

TEST(StateIndex, LeftmostCharacterIsLeastSignificant) {
  EXPECT_EQ(state_index(Codeword::parse("011")), 6U);
  EXPECT_EQ(state_index("000000"), 0U);
  EXPECT_EQ(state_index(Codeword::parse("111")), 7U);
  EXPECT_EQ(bitstring_of(6, 3), "011");
  for (StateIndex i = 0; i < 64; ++i) EXPECT_EQ(state_index(bitstring_of(i, 6)), i);
}

TEST(EnumerateBasis, ThreeCharacterBasisIsLexicographic) {
  const auto basis = enumerate_basis(3);
  EXPECT_EQ(strings_of(basis), (std::vector<std::string>{"010", "011", "101", "110", "111"}));
}

TEST(EnumerateBasis, SmallCases) {
  EXPECT_EQ(strings_of(enumerate_basis(1)), (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(enumerate_basis(10).size(), 144U);
}

TEST(EnumerateBasis, MatchesBruteForceFilter) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(strings_of(enumerate_basis(n)), oracle::brute_force_strings(n, {"00"})) << "N=" << n;
  }
}

TEST(EnumerateBasis, FibonacciRecurrence) {
  std::vector<std::size_t> dim(17);
  for (int n = 1; n <= 16; ++n) {
    dim[static_cast<std::size_t>(n)] = enumerate_basis(n).size();
    EXPECT_EQ(dim[static_cast<std::size_t>(n)], fibonacci(n + 2));
  }
  EXPECT_EQ(dim[1], 2U);
  EXPECT_EQ(dim[2], 3U);
  for (std::size_t n = 3; n <= 16; ++n) EXPECT_EQ(dim[n], dim[n - 1] + dim[n - 2]);
}

TEST(EnumerateBasis, Guards) {
  EXPECT_THROW(enumerate_basis(0), BoundsError);
  EXPECT_THROW(enumerate_basis(25), ResourceGuardError);
  EXPECT_THROW(enumerate_basis(8, 6), ResourceGuardError);
  EXPECT_NO_THROW(enumerate_basis(6, 6));
}

TEST(EnumerateBasis, LabelsRoundTrip) {
  const auto basis = enumerate_basis(7);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    EXPECT_EQ(basis.label_of(basis[a]), a);
    EXPECT_EQ(basis.label_of_index(basis.state_index(a)), a);
  }
  EXPECT_FALSE(basis.label_of_index(0).has_value());
}

TEST(Isometry, ThreeQubitRows) {
  const auto v = build_isometry(3);
  ASSERT_EQ(v.matrix.rows(), 8);
  ASSERT_EQ(v.matrix.cols(), 5);
  const int rows[] = {2, 6, 5, 3, 7};
  const Eigen::MatrixXd dense(v.matrix);
  for (int col = 0; col < 5; ++col) {
    for (int row = 0; row < 8; ++row) EXPECT_EQ(dense(row, col), row == rows[col] ? 1.0 : 0.0);
  }
}

TEST(Isometry, OneQubitIsIdentityPermutation) {
  const Eigen::MatrixXd dense(build_isometry(1).matrix);
  EXPECT_TRUE(dense.isApprox(Eigen::MatrixXd::Identity(2, 2)));
}

TEST(Isometry, SixQubitShape) {
  const auto v = build_isometry(6);
  EXPECT_EQ(v.matrix.rows(), 64);
  EXPECT_EQ(v.matrix.cols(), 21);
  EXPECT_EQ(v.matrix.nonZeros(), 21);
}

TEST(Isometry, IsExactIsometryAndProjectorHasCodeTrace) {
  for (int n = 1; n <= 10; ++n) {
    const auto v = build_isometry(n);
    const Eigen::MatrixXd vtv(v.matrix.transpose() * v.matrix);
    EXPECT_EQ(vtv, Eigen::MatrixXd::Identity(vtv.rows(), vtv.cols())) << "N=" << n;
    const Eigen::MatrixXd vvt(v.matrix * v.matrix.transpose());
    EXPECT_EQ(vvt.trace(), static_cast<double>(fibonacci(n + 2)));
    EXPECT_TRUE(vvt.isDiagonal());
    for (Eigen::Index c = 0; c < v.matrix.cols(); ++c) EXPECT_EQ(v.matrix.col(c).nonZeros(), 1);
  }
}
