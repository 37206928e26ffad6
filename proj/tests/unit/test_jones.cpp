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

#include "qic/jones.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <filesystem>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "qic/errors.hpp"

using namespace qic;

namespace {

using Complex = std::complex<double>;

// Code-space trace of the product of Kronecker-lifted gates, with the
// normalization written out from scratch.
Complex oracle_jones(const BraidWord& w) {
  const int n = w.strands;
  const auto dim = static_cast<Eigen::Index>(1) << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  for (int letter : w.letters) {
    const int g = std::abs(letter) - 1;
    // kl: sigma_k -> B_{k-1}^{-1}
    const int sign = letter > 0 ? -1 : 1;
    const Eigen::MatrixXcd lifted = g == 0 ? oracle::lift_boundary(boundary_gate(sign).matrix, n)
                                           : oracle::lift_window(b_gate(sign).matrix, g - 1, n);
    m = (m * lifted).eval();
  }
  Complex trace = 0.0;
  std::uint64_t code_dim = 0;
  for (StateIndex i = 0; i < static_cast<StateIndex>(dim); ++i) {
    if (bitstring_of(i, n).find("00") != std::string::npos) continue;
    trace += m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
    ++code_dim;
  }
  const Complex a = std::exp(Complex(0.0, 3.0 * std::numbers::pi / 5.0));
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  return std::pow(-a * a * a, -w.writhe()) * std::pow(phi, n - 1) / static_cast<double>(code_dim) * trace;
}

BraidWord knot_12a_122() {
  return read_braid_file(std::filesystem::path(QIC_DATA_DIR) / "knots" / "12a_122.braid").at(0);
}

}  // namespace

TEST(JonesExact, TrefoilTwoStrands) {
  const auto r = jones_exact(parse_braid_word("trefoil", 0));
  EXPECT_NEAR(r.value.real(), -0.770, 5e-3);
  EXPECT_NEAR(r.value.imag(), -1.343, 5e-3);
  EXPECT_EQ(r.writhe, 3);
  EXPECT_EQ(r.num_qubits, 2);
  EXPECT_EQ(r.method, JonesMethod::Exact);
  EXPECT_NEAR(std::abs(r.value - oracle_jones(BraidWord{2, {1, 1, 1}})), 0.0, 1e-12);
}

TEST(JonesExact, TrefoilDiffersFromTextbookValueByAboutFivePercent) {
  const Complex t = std::exp(Complex(0.0, -2.0 * std::numbers::pi / 5.0));
  const Complex theory = t + t * t * t - t * t * t * t;
  EXPECT_NEAR(std::abs(jones_theory_trefoil() - theory), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(jones_exact(BraidWord{2, {1, 1, 1}}).value - theory), 0.05, 0.01);
}

TEST(JonesExact, ThreeStrandTrefoilReading) {
  const auto r = jones_exact(BraidWord{3, {1, 1, 1}});
  EXPECT_NEAR(std::abs(r.value - oracle_jones(BraidWord{3, {1, 1, 1}})), 0.0, 1e-12);
  EXPECT_NEAR(r.value.real(), -1.3326, 1e-4);
  EXPECT_NEAR(r.value.imag(), -2.1095, 1e-4);
}

TEST(JonesExact, Knot12a122) {
  const auto r = jones_exact(knot_12a_122());
  EXPECT_NEAR(r.value.real(), 0.170, 0.02);
  EXPECT_NEAR(r.value.imag(), -1.015, 0.02);
  EXPECT_NEAR(std::abs(r.value - oracle_jones(knot_12a_122())), 0.0, 1e-12);
}

TEST(JonesExact, MatchesOracleOnMixedWords) {
  for (const auto& w : {BraidWord{3, {1, -2, 1, 2}}, BraidWord{4, {1, 2, 3, -1, -2}}, BraidWord{4, {}},
                        BraidWord{5, {4, 4, -3, 2, 1, 1}}}) {
    EXPECT_NEAR(std::abs(jones_exact(w).value - oracle_jones(w)), 0.0, 1e-12);
  }
}

TEST(JonesExact, ConjugationInvariance) {
  const BraidWord w{4, {1, -2, 3, 3, -1, 2}};
  const auto base = jones_exact(w);
  for (int g : {1, -1, 2, -2, 3, -3}) {
    BraidWord c{4, {g}};
    c.letters.insert(c.letters.end(), w.letters.begin(), w.letters.end());
    c.letters.push_back(-g);
    const auto r = jones_exact(c);
    EXPECT_EQ(r.writhe, base.writhe);
    EXPECT_NEAR(std::abs(r.trace - base.trace), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(r.value - base.value), 0.0, 1e-12);
  }
}

TEST(JonesExact, CyclicRotationInvariance) {
  BraidWord w = knot_12a_122();
  const auto base = jones_exact(w).value;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    std::rotate(w.letters.begin(), w.letters.begin() + 1, w.letters.end());
    EXPECT_NEAR(std::abs(jones_exact(w).value - base), 0.0, 1e-12);
  }
}

TEST(BraidRep, Unitary) {
  for (const auto& w : {knot_12a_122(), BraidWord{3, {1, -2, 1}}, BraidWord{2, {1, 1, 1}}}) {
    for (auto conv : {BraidConvention::Paper, BraidConvention::KauffmanLomonaco}) {
      const Eigen::MatrixXcd m = braid_rep_matrix(w, conv).matrix;
      EXPECT_LT(max_abs(Eigen::MatrixXcd(m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols()))),
                1e-12);
    }
  }
}

TEST(BraidRep, ConventionsAreInverseOfEachOtherPerLetter) {
  const BraidWord w{3, {1, -2}};
  const Eigen::MatrixXcd paper = braid_rep_matrix(w, BraidConvention::Paper).matrix;
  const Eigen::MatrixXcd kl = braid_rep_matrix(w, BraidConvention::KauffmanLomonaco).matrix;
  const Eigen::MatrixXcd b0 = build_abstract_braid(3, 0, 1).matrix;
  const Eigen::MatrixXcd b1 = build_abstract_braid(3, 1, 1).matrix;
  EXPECT_LT(max_abs(Eigen::MatrixXcd(paper - b0 * b1.adjoint())), 1e-14);
  EXPECT_LT(max_abs(Eigen::MatrixXcd(kl - b0.adjoint() * b1)), 1e-14);
}

TEST(BraidDiagonal, LocalEngineMatchesAbstractTrace) {
  const auto w = knot_12a_122();
  const Eigen::MatrixXcd m = braid_rep_matrix(w, BraidConvention::KauffmanLomonaco).matrix;
  const auto diag = braid_diagonal_local(w, BraidConvention::KauffmanLomonaco);
  ASSERT_EQ(diag.size(), static_cast<std::size_t>(m.rows()));
  for (std::size_t a = 0; a < diag.size(); ++a) {
    EXPECT_NEAR(std::abs(diag[a] - m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a))), 0.0, 1e-12);
  }
}

TEST(JonesShots, InfiniteShotLimitIsExact) {
  for (const auto& w : {BraidWord{2, {1, 1, 1}}, knot_12a_122()}) {
    const auto limit = jones_hadamard_limit(w);
    EXPECT_NEAR(std::abs(limit.value - jones_exact(w).value), 0.0, 1e-12);
    EXPECT_EQ(limit.std_error.value(), 0.0);
  }
}

TEST(JonesShots, DeterministicPerSeed) {
  const BraidWord w{2, {1, 1, 1}};
  const auto a = jones_shot_estimate(w, BraidConvention::KauffmanLomonaco, 8192, 42);
  const auto b = jones_shot_estimate(w, BraidConvention::KauffmanLomonaco, 8192, 42);
  const auto c = jones_shot_estimate(w, BraidConvention::KauffmanLomonaco, 8192, 43);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.std_error, b.std_error);
  EXPECT_NE(a.value, c.value);
  EXPECT_EQ(a.shots_per_state.value(), 8192);
  EXPECT_EQ(a.method, JonesMethod::Shots);
}

TEST(JonesShots, TrefoilWithinToleranceAndUnbiased) {
  const BraidWord w{2, {1, 1, 1}};
  const Complex exact = jones_exact(w).value;
  int within = 0;
  Complex mean = 0.0;
  double se = 0.0;
  const int seeds = 100;
  for (int s = 0; s < seeds; ++s) {
    const auto r = jones_shot_estimate(w, BraidConvention::KauffmanLomonaco, 8192, static_cast<std::uint64_t>(s));
    if (std::abs(r.value - exact) <= 0.15) ++within;
    mean += r.value / static_cast<double>(seeds);
    se = r.std_error.value();
  }
  EXPECT_GE(within, 95);
  // Standard error of the mean of 100 independent estimates.
  EXPECT_LT(std::abs(mean - exact), 3.0 * se / std::sqrt(static_cast<double>(seeds)));
}

TEST(JonesShots, StdErrorMatchesEmpiricalSpread) {
  const BraidWord w{3, {1, -2, 1}};
  const Complex exact = jones_exact(w).value;
  double sq = 0.0, se = 0.0;
  const int seeds = 400;
  for (int s = 0; s < seeds; ++s) {
    const auto r = jones_shot_estimate(w, BraidConvention::KauffmanLomonaco, 256, static_cast<std::uint64_t>(s));
    sq += std::norm(r.value - exact);
    se = r.std_error.value();
  }
  EXPECT_NEAR(std::sqrt(sq / seeds), se, 0.15 * se);
}

TEST(JonesShots, RejectsZeroShots) {
  EXPECT_THROW(jones_shot_estimate(BraidWord{2, {1}}, BraidConvention::Paper, 0, 1), BoundsError);
}

TEST(FusionProbability, WorkedExample) {
  EXPECT_NEAR(fusion_probability(3, 1, 0, Codeword::parse("101")), 1.0 / std::pow(golden().phi, 2), 1e-12);
}

TEST(FusionProbability, SweepValueSet) {
  const double phi = golden().phi;
  const std::vector<double> targets{0.0, std::pow(phi, -3), std::pow(phi, -2), 1.0 / phi, 1.0};
  const auto basis = enumerate_basis(3);
  std::vector<double> values;
  for (int k : {0, 1}) {
    for (const auto& q : basis.codewords()) values.push_back(fusion_probability(3, 1, k, q));
  }
  for (double t : targets) {
    EXPECT_TRUE(std::any_of(values.begin(), values.end(), [&](double v) { return std::abs(v - t) < 1e-12; })) << t;
  }
  for (double v : values) {
    EXPECT_TRUE(std::any_of(targets.begin(), targets.end(), [&](double t) { return std::abs(v - t) < 1e-12; })) << v;
  }
}

TEST(FusionProbability, FarBraidOnFixedStateIsOne) {
  EXPECT_NEAR(fusion_probability(5, 1, 3, Codeword::parse("01011")), 1.0, 1e-12);
}

TEST(FusionProbability, Errors) {
  EXPECT_THROW(fusion_probability(4, 1, 0, Codeword::parse("101")), DimensionError);
  EXPECT_THROW(fusion_probability(3, 2, 0, Codeword::parse("101")), BoundsError);
}
