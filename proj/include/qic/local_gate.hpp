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

#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "qic/braid.hpp"
#include "qic/constants.hpp"
#include "qic/statevector.hpp"
#include "qic/verification.hpp"

namespace qic {

// Local windows
// -------------
// Generator n >= 1 acts on written characters (n-1, n, n+1); the 8x8 local
// index is 4*c_{n-1} + 2*c_n + c_{n+1}, so |000> .. |111> reads the window
// left to right. Generator 0 sees a virtual c_{-1} = 1 and acts on (c_0, c_1)
// with the 4x4 restriction of the same matrices (local index 2*c_0 + c_1).

template <typename Real = double>
using LocalMatrix8 = Eigen::Matrix<std::complex<Real>, 8, 8>;
template <typename Real = double>
using LocalMatrix4 = Eigen::Matrix<std::complex<Real>, 4, 4>;

/// P_local: 1 on |010>, the rank-1 block [[z, x], [x, y]] on {|101>, |111>},
/// 0 elsewhere (including every window containing 00).
template <typename Real = double>
Eigen::Matrix<Real, 8, 8> local_projector() {
  const auto& g = golden<Real>();
  Eigen::Matrix<Real, 8, 8> p = Eigen::Matrix<Real, 8, 8>::Zero();
  p(0b010, 0b010) = Real(1);
  p(0b101, 0b101) = g.z;
  p(0b101, 0b111) = g.x;
  p(0b111, 0b101) = g.x;
  p(0b111, 0b111) = g.y;
  return p;
}

/// Left-pad restriction of P_local: the block with c_{-1} = 1.
template <typename Real = double>
Eigen::Matrix<Real, 4, 4> boundary_projector() {
  return local_projector<Real>().template bottomRightCorner<4, 4>();
}

template <int Dim, typename Real = double>
struct LocalGate {
  Eigen::Matrix<std::complex<Real>, Dim, Dim> matrix;
  int sign = 1;
};

/// R_tau * I + (R_I - R_tau) * P, conjugate-transposed for sign = -1.
template <int Dim, typename Real>
LocalGate<Dim, Real> gate_from_projector(const Eigen::Matrix<Real, Dim, Dim>& projector, int sign,
                                         PhaseConvention convention = PhaseConvention::Stated) {
  if (sign != 1 && sign != -1) throw BoundsError("gate sign must be +1 or -1");
  const auto [r_identity, r_tau] = braid_phases<Real>(convention);
  LocalGate<Dim, Real> gate;
  gate.matrix = r_tau * Eigen::Matrix<std::complex<Real>, Dim, Dim>::Identity() +
                (r_identity - r_tau) * projector.template cast<std::complex<Real>>();
  if (sign < 0) gate.matrix = gate.matrix.adjoint().eval();
  gate.sign = sign;
  return gate;
}

template <typename Real = double>
LocalGate<8, Real> b_gate(int sign = 1, PhaseConvention convention = PhaseConvention::Stated) {
  return gate_from_projector<8, Real>(local_projector<Real>(), sign, convention);
}

template <typename Real = double>
LocalGate<4, Real> boundary_gate(int sign = 1, PhaseConvention convention = PhaseConvention::Stated) {
  return gate_from_projector<4, Real>(boundary_projector<Real>(), sign, convention);
}

/// Where generator n lands on an N-character register.
struct GateApplicationPlan {
  int num_qubits = 0;
  int generator = 0;
  bool boundary = false;
  /// Window characters, local MSB first; only the first `width` are used.
  std::array<int, 3> window{};
  int width = 0;

  static GateApplicationPlan make(int num_qubits, int generator) {
    if (generator < 0 || generator > num_qubits - 2) {
      throw BoundsError("generator index " + std::to_string(generator) + " out of range for N=" +
                        std::to_string(num_qubits));
    }
    GateApplicationPlan plan;
    plan.num_qubits = num_qubits;
    plan.generator = generator;
    if (generator == 0) {
      plan.boundary = true;
      plan.window = {0, 1, -1};
      plan.width = 2;
    } else {
      plan.window = {generator - 1, generator, generator + 1};
      plan.width = 3;
    }
    return plan;
  }
};

namespace detail {

/// Spreads the bits of `k` around zero bits at `sorted_positions` (ascending).
template <std::size_t W>
inline StateIndex insert_zero_bits(StateIndex k, const std::array<int, W>& sorted_positions) {
  for (int pos : sorted_positions) {
    const StateIndex low = k & ((StateIndex{1} << pos) - 1);
    k = ((k >> pos) << (pos + 1)) | low;
  }
  return k;
}

}  // namespace detail

/// Applies a 2^W x 2^W matrix to the characters `chars` of psi in place.
/// chars[0] is the most significant bit of the local index. O(2^N).
template <std::size_t W, typename Real, typename Derived>
void apply_local_matrix(BasicStatevector<Real>& psi, const std::array<int, W>& chars,
                        const Eigen::MatrixBase<Derived>& m) {
  constexpr int kDim = 1 << W;
  static_assert(Derived::RowsAtCompileTime == kDim && Derived::ColsAtCompileTime == kDim,
                "local matrix size must be 2^W");
  const int n = psi.num_qubits();
  std::array<int, W> sorted = chars;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < W; ++j) {
    if (sorted[j] < 0 || sorted[j] >= n || (j > 0 && sorted[j] == sorted[j - 1])) {
      throw BoundsError("apply_local_matrix: window characters out of range or repeated");
    }
  }

  std::array<StateIndex, kDim> offset{};
  for (int l = 0; l < kDim; ++l) {
    StateIndex off = 0;
    for (std::size_t j = 0; j < W; ++j) {
      if ((l >> (W - 1 - j)) & 1) off |= StateIndex{1} << chars[j];
    }
    offset[static_cast<std::size_t>(l)] = off;
  }

  const Eigen::Matrix<std::complex<Real>, kDim, kDim> op = m.template cast<std::complex<Real>>();
  Eigen::Matrix<std::complex<Real>, kDim, 1> local, out;
  const StateIndex spectators = StateIndex{1} << (n - static_cast<int>(W));
  auto& amps = psi.amplitudes();
  for (StateIndex k = 0; k < spectators; ++k) {
    const StateIndex base = detail::insert_zero_bits(k, sorted);
    for (int l = 0; l < kDim; ++l) local(l) = amps(static_cast<Eigen::Index>(base + offset[l]));
    out.noalias() = op * local;
    for (int l = 0; l < kDim; ++l) amps(static_cast<Eigen::Index>(base + offset[l])) = out(l);
  }
}

/// B'_n (sign +1) or its inverse (sign -1) through the local engine.
template <typename Real>
void apply_braid_generator(BasicStatevector<Real>& psi, int n, int sign = 1,
                           PhaseConvention convention = PhaseConvention::Stated) {
  const auto plan = GateApplicationPlan::make(psi.num_qubits(), n);
  if (plan.boundary) {
    apply_local_matrix<2>(psi, std::array<int, 2>{plan.window[0], plan.window[1]},
                          boundary_gate<Real>(sign, convention).matrix);
  } else {
    apply_local_matrix<3>(psi, plan.window, b_gate<Real>(sign, convention).matrix);
  }
}

/// The bulk 8x8 gate on characters (first, first+1, first+2), no boundary
/// special-casing. Bulk window f coincides with generator f + 1.
template <typename Real>
void apply_bulk_window(BasicStatevector<Real>& psi, int first, int sign = 1,
                       PhaseConvention convention = PhaseConvention::Stated) {
  if (first < 0 || first + 2 >= psi.num_qubits()) {
    throw BoundsError("bulk window " + std::to_string(first) + " does not fit N=" +
                      std::to_string(psi.num_qubits()));
  }
  apply_local_matrix<3>(psi, std::array<int, 3>{first, first + 1, first + 2},
                        b_gate<Real>(sign, convention).matrix);
}

/// P'_n through the local windows (exact on code-space states).
template <typename Real>
void apply_local_projector(BasicStatevector<Real>& psi, int n) {
  const auto plan = GateApplicationPlan::make(psi.num_qubits(), n);
  if (plan.boundary) {
    apply_local_matrix<2>(psi, std::array<int, 2>{0, 1}, boundary_projector<Real>());
  } else {
    apply_local_matrix<3>(psi, plan.window, local_projector<Real>());
  }
}

/// Default cap for checks that materialize 2^N x 2^N embedded operators.
inline constexpr int kEmbeddedMaxQubits = 12;

/// For every generator and codeword, compares the local engine with B'_n|q>.
VerificationReport verify_local_global_equivalence(int n, double tol = kDefaultTolerance,
                                                   int max_qubits = kEmbeddedMaxQubits);

/// Algebra checks that never build a 2^N x 2^N matrix: norm preservation,
/// inverses, Yang-Baxter, far commutation, local TL relations and subspace
/// preservation, all on a seeded random code-space state.
VerificationReport verify_local_algebra(int n, double tol = kDefaultTolerance, std::uint64_t seed = 7,
                                        int max_qubits = kDefaultMaxQubits);

struct CompilationCost {
  std::uint64_t local_gate_count = 0;
  std::uint64_t local_depth = 0;
  std::uint64_t global_dim = 0;
};

/// Abstract operation counts: one local gate per letter, executed
/// sequentially, versus the 2^N dimension a global unitary would need.
CompilationCost compilation_cost_model(const BraidWord& word, int n);

}  // namespace qic
