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

#include <map>
#include <string>

#include <Eigen/Core>

#include "qic/statevector.hpp"

namespace qic {

/// <psi| H |psi> for H = lambda * sum_i |00><00| on characters (i, i+1).
/// H is diagonal, so this is lambda * sum |amp|^2 * (#adjacent 00 pairs).
template <typename Real>
Real hamiltonian_energy(const BasicStatevector<Real>& psi, Real lambda = Real(1)) {
  require_normalized(psi, "hamiltonian_energy");
  const int n = psi.num_qubits();
  Real energy = 0;
  for (StateIndex i = 0; i < psi.dim(); ++i) {
    const int pairs = count_adjacent_zero_pairs(i, n);
    if (pairs != 0) energy += std::norm(psi[i]) * Real(pairs);
  }
  return lambda * energy;
}

/// Pauli-Z strings keyed in tensor order Z_{N-1} ... Z_0. Because qubit k is
/// character c_{N-1-k}, position j of the key acts on written character c_j.
using PauliZMap = std::map<std::string, double>;

/// Coefficients of H in the {I, Z}^N basis. Requires N >= 2.
PauliZMap pauli_decomposition(int n, double lambda = 1.0);

/// Diagonal of H (length 2^N) from the projector-sum definition.
Eigen::VectorXd hamiltonian_diagonal(int n, double lambda = 1.0);

/// Diagonal of sum_s coeff_s * Z-string_s, for cross-checking a Pauli map.
Eigen::VectorXd pauli_map_diagonal(const PauliZMap& terms, int n);

}  // namespace qic
