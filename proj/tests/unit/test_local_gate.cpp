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

#include "qic/local_gate.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "qic/braid.hpp"
#include "qic/errors.hpp"
#include "qic/hamiltonian.hpp"
#include "qic/tl_ops.hpp"

using namespace qic;

namespace {

using Complex = std::complex<double>;

Eigen::VectorXcd random_vector(Eigen::Index dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  return v.normalized();
}

Eigen::VectorXcd random_code_vector(int n, unsigned seed) {
  Eigen::VectorXcd v = random_vector(static_cast<Eigen::Index>(1) << n, seed);
  for (StateIndex i = 0; i < (StateIndex{1} << n); ++i) {
    if (!Codeword::is_valid(bitstring_of(i, n))) v(static_cast<Eigen::Index>(i)) = 0.0;
  }
  return v.normalized();
}

}  // namespace

TEST(BGate, MatchesDisplayedEntries) {
  const auto& g = golden();
  const auto gate = b_gate().matrix;
  const Complex d = g.r_identity - g.r_tau;
  LocalMatrix8<> expected = LocalMatrix8<>::Zero();
  for (int i : {0, 1, 3, 4, 6}) expected(i, i) = g.r_tau;
  expected(2, 2) = g.r_identity;
  expected(5, 5) = g.r_tau + d / (g.phi * g.phi);
  expected(7, 7) = g.r_tau + d / g.phi;
  expected(5, 7) = expected(7, 5) = d * std::sqrt(g.phi - 1.0) / g.phi;
  EXPECT_LT((gate - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(BGate, UnitaryAndInverse) {
  const auto b = b_gate(+1).matrix;
  const auto binv = b_gate(-1).matrix;
  EXPECT_LT((b * b.adjoint() - LocalMatrix8<>::Identity()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((b * binv - LocalMatrix8<>::Identity()).cwiseAbs().maxCoeff(), 1e-15);
  const auto c = boundary_gate(+1).matrix;
  EXPECT_LT((c * c.adjoint() - LocalMatrix4<>::Identity()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(b_gate(0), BoundsError);
}

TEST(BGate, Eigenphases) {
  const auto& g = golden();
  Eigen::ComplexEigenSolver<LocalMatrix8<>> es(b_gate().matrix);
  int identity_count = 0, tau_count = 0;
  for (Eigen::Index i = 0; i < 8; ++i) {
    if (std::abs(es.eigenvalues()(i) - g.r_identity) < 1e-12) ++identity_count;
    if (std::abs(es.eigenvalues()(i) - g.r_tau) < 1e-12) ++tau_count;
  }
  // P_local has rank 2: |010> and the rank-1 {101,111} block.
  EXPECT_EQ(identity_count, 2);
  EXPECT_EQ(tau_count, 6);
}

TEST(BGate, LongDoubleAgreesWithDouble) {
  const auto ld = b_gate<long double>().matrix;
  const auto d = b_gate<double>().matrix;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      EXPECT_NEAR(static_cast<double>(std::abs(ld(r, c) - std::complex<long double>(d(r, c)))), 0.0, 1e-15);
    }
  }
}

TEST(GateApplicationPlan, Windows) {
  const auto boundary = GateApplicationPlan::make(5, 0);
  EXPECT_TRUE(boundary.boundary);
  EXPECT_EQ(boundary.width, 2);
  EXPECT_EQ(boundary.window[0], 0);
  EXPECT_EQ(boundary.window[1], 1);
  const auto bulk = GateApplicationPlan::make(5, 3);
  EXPECT_FALSE(bulk.boundary);
  EXPECT_EQ(bulk.width, 3);
  EXPECT_EQ(bulk.window, (std::array<int, 3>{2, 3, 4}));
  EXPECT_THROW(GateApplicationPlan::make(5, 4), BoundsError);
  EXPECT_THROW(GateApplicationPlan::make(5, -1), BoundsError);
}

TEST(LocalEngine, MatchesKroneckerLiftOnArbitraryStates) {
  // Includes amplitudes outside the code space.
  for (int n = 3; n <= 8; ++n) {
    for (int first = 0; first + 2 < n; ++first) {
      for (int sign : {+1, -1}) {
        const LocalMatrix8<> gate = b_gate(sign).matrix;
        const Eigen::VectorXcd v = random_vector(static_cast<Eigen::Index>(1) << n, 31U * n + first);
        const Eigen::VectorXcd expected = oracle::lift_window(gate, first, n) * v;
        auto psi = Statevector::from_amplitudes(n, v);
        apply_bulk_window(psi, first, sign);
        EXPECT_LT((psi.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-14) << n << ' ' << first;
      }
    }
  }
}

TEST(LocalEngine, BoundaryMatchesKroneckerLift) {
  for (int n = 2; n <= 7; ++n) {
    const Eigen::VectorXcd v = random_vector(static_cast<Eigen::Index>(1) << n, 7U + n);
    const Eigen::VectorXcd expected = oracle::lift_boundary(boundary_gate().matrix, n) * v;
    auto psi = Statevector::from_amplitudes(n, v);
    apply_braid_generator(psi, 0);
    EXPECT_LT((psi.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(LocalEngine, GeneratorEqualsEmbeddedBraidOnCodeStates) {
  for (int n = 2; n <= 9; ++n) {
    const auto v = build_isometry(n);
    const Eigen::VectorXcd x = random_code_vector(n, 100U + n);
    for (int g = 0; g <= n - 2; ++g) {
      for (int sign : {+1, -1}) {
        const SparseMatrixXcd b = embed_operator(v, build_abstract_braid(n, g, sign)).matrix;
        auto psi = Statevector::from_amplitudes(n, x);
        apply_braid_generator(psi, g, sign);
        EXPECT_LT((psi.amplitudes() - b * x).cwiseAbs().maxCoeff(), 1e-13);
      }
    }
  }
}

TEST(LocalEngine, ProjectorEqualsEmbeddedProjectorOnCodeStates) {
  const int n = 6;
  const auto v = build_isometry(n);
  const Eigen::VectorXcd x = random_code_vector(n, 5);
  for (int g = 0; g <= n - 2; ++g) {
    const SparseMatrixXcd p = embed_operator(v, build_abstract_projector(n, g)).matrix;
    auto psi = Statevector::from_amplitudes(n, x);
    apply_local_projector(psi, g);
    EXPECT_LT((psi.amplitudes() - p * x).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(LocalEngine, BulkWindowIsShiftedGenerator) {
  const Eigen::VectorXcd x = random_vector(64, 9);
  for (int f = 0; f <= 3; ++f) {
    auto a = Statevector::from_amplitudes(6, x);
    auto b = Statevector::from_amplitudes(6, x);
    apply_bulk_window(a, f);
    apply_braid_generator(b, f + 1);
    EXPECT_EQ(a.amplitudes(), b.amplitudes());
  }
}

TEST(LocalEngine, RangeErrors) {
  Statevector psi(4);
  EXPECT_THROW(apply_braid_generator(psi, 3), BoundsError);
  EXPECT_THROW(apply_bulk_window(psi, 2), BoundsError);
  EXPECT_THROW(apply_local_matrix<3>(psi, std::array<int, 3>{0, 0, 1}, b_gate().matrix), BoundsError);
}

TEST(LocalEngine, KeepsCodeStatesInGroundSpace) {
  const int n = 11;
  auto psi = Statevector::from_amplitudes(n, random_code_vector(n, 3));
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> gen(0, n - 2);
  for (int step = 0; step < 50; ++step) apply_braid_generator(psi, gen(rng), step % 3 ? 1 : -1);
  EXPECT_LT(hamiltonian_energy(psi), 1e-20);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
}

TEST(VerifyLocalGlobal, EquivalenceSmallSizes) {
  for (int n = 2; n <= 8; ++n) {
    const auto report = verify_local_global_equivalence(n, 1e-12);
    EXPECT_TRUE(report.passed()) << "N=" << n;
    EXPECT_EQ(report.find("local_equals_embedded")->instances, static_cast<std::size_t>(n - 1) * fibonacci(n + 2));
  }
  EXPECT_THROW(verify_local_global_equivalence(13), ResourceGuardError);
}

TEST(VerifyLocalAlgebra, AllChecksPass) {
  for (int n = 2; n <= 12; ++n) EXPECT_TRUE(verify_local_algebra(n).passed()) << "N=" << n;
}

TEST(VerifyLocalAlgebra, SeventeenQubits) {
  const auto report = verify_local_algebra(17);
  EXPECT_TRUE(report.passed());
  for (const char* name : {"norm_preservation", "inverse", "yang_baxter", "far_commutation", "projector_idempotent",
                           "tl_adjacent", "subspace_preservation"}) {
    ASSERT_NE(report.find(name), nullptr) << name;
    EXPECT_GT(report.find(name)->instances, 0U) << name;
  }
}

TEST(VerifyLocalAlgebra, Guard) { EXPECT_THROW(verify_local_algebra(10, 1e-10, 7, 8), ResourceGuardError); }

TEST(CompilationCost, LinearInWordLength) {
  const auto word = parse_braid_word("1 -2 1 3", 4);
  const auto cost = compilation_cost_model(word, 10);
  EXPECT_EQ(cost.local_gate_count, 4U);
  EXPECT_EQ(cost.local_depth, 4U);
  EXPECT_EQ(cost.global_dim, 1024U);
  EXPECT_THROW(compilation_cost_model(word, 3), BoundsError);
}

TEST(LocalEngine, SingleGateAtSeventeenQubitsIsFast) {
  auto psi = Statevector::basis_state(Codeword::parse("10101010101010101"));
  const auto start = std::chrono::steady_clock::now();
  apply_braid_generator(psi, 8);
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(ms, 100.0);
}
