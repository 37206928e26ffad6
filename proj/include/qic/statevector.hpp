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

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "qic/basis.hpp"
#include "qic/errors.hpp"

namespace qic {

inline constexpr double kNormTolerance = 1e-12;

/// 2^N complex amplitudes indexed by `state_index` (c_0 is the LSB).
template <typename Real>
class BasicStatevector {
 public:
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  /// |0...0>. Throws ResourceGuardError above `max_qubits`.
  explicit BasicStatevector(int n, int max_qubits = kDefaultMaxQubits) : num_qubits_(n) {
    check_size(n, max_qubits);
    amplitudes_ = Vector::Zero(static_cast<Eigen::Index>(StateIndex{1} << n));
    amplitudes_(0) = Scalar(1);
  }

  static BasicStatevector from_index(int n, StateIndex index, int max_qubits = kDefaultMaxQubits) {
    BasicStatevector psi(n, max_qubits);
    if (index >= psi.dim()) throw BoundsError("statevector: basis index out of range");
    psi.amplitudes_(0) = Scalar(0);
    psi.amplitudes_(static_cast<Eigen::Index>(index)) = Scalar(1);
    return psi;
  }

  static BasicStatevector basis_state(const Codeword& w, int max_qubits = kDefaultMaxQubits) {
    return from_index(w.size(), w.index(), max_qubits);
  }

  /// Basis state of an arbitrary written bitstring (code or not).
  static BasicStatevector from_bitstring(std::string_view bits, int max_qubits = kDefaultMaxQubits) {
    return from_index(static_cast<int>(bits.size()), state_index(bits), max_qubits);
  }

  static BasicStatevector from_amplitudes(int n, Vector amplitudes) {
    BasicStatevector psi(n);
    if (amplitudes.size() != psi.amplitudes_.size()) {
      throw DimensionError("statevector: amplitude count is not 2^N");
    }
    psi.amplitudes_ = std::move(amplitudes);
    return psi;
  }

  int num_qubits() const noexcept { return num_qubits_; }
  StateIndex dim() const noexcept { return static_cast<StateIndex>(amplitudes_.size()); }

  Vector& amplitudes() noexcept { return amplitudes_; }
  const Vector& amplitudes() const noexcept { return amplitudes_; }

  Scalar& operator[](StateIndex i) { return amplitudes_(static_cast<Eigen::Index>(i)); }
  const Scalar& operator[](StateIndex i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

  Real squared_norm() const { return amplitudes_.squaredNorm(); }
  Real norm() const { return amplitudes_.norm(); }

  bool is_normalized(Real tol = Real(kNormTolerance)) const {
    return std::abs(squared_norm() - Real(1)) <= tol;
  }

  void normalize() {
    const Real n = norm();
    if (n == Real(0)) throw NormalizationError("statevector: cannot normalize the zero vector");
    amplitudes_ /= n;
  }

  Eigen::Matrix<Real, Eigen::Dynamic, 1> probabilities() const { return amplitudes_.cwiseAbs2(); }

 private:
  static void check_size(int n, int max_qubits) {
    if (n < 1) throw BoundsError("statevector: N must be at least 1");
    if (n > max_qubits) {
      throw ResourceGuardError("statevector: N=" + std::to_string(n) +
                               " exceeds the configured limit " + std::to_string(max_qubits));
    }
  }

  int num_qubits_;
  Vector amplitudes_;
};

using Statevector = BasicStatevector<double>;

/// Throws NormalizationError unless |psi| = 1 within `tol`.
template <typename Real>
void require_normalized(const BasicStatevector<Real>& psi, const char* where,
                        Real tol = Real(1e-10)) {
  if (!psi.is_normalized(tol)) {
    throw NormalizationError(std::string(where) + ": state is not normalized (|psi|^2 = " +
                             std::to_string(static_cast<double>(psi.squared_norm())) + ")");
  }
}

}  // namespace qic
