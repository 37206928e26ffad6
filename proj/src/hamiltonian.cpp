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

#include "qic/hamiltonian.hpp"

#include "qic/errors.hpp"

namespace qic {

PauliZMap pauli_decomposition(int n, double lambda) {
  if (n < 2) throw BoundsError("pauli_decomposition: N must be at least 2");
  if (n > 62) throw BoundsError("pauli_decomposition: N too large");
  PauliZMap terms;
  // Each |00><00| on (c_j, c_{j+1}) is (I + Z_j)(I + Z_{j+1}) / 4.
  for (int j = 0; j + 1 < n; ++j) {
    for (int mask = 0; mask < 4; ++mask) {
      std::string key(static_cast<std::size_t>(n), 'I');
      if (mask & 1) key[static_cast<std::size_t>(j)] = 'Z';
      if (mask & 2) key[static_cast<std::size_t>(j + 1)] = 'Z';
      terms[key] += lambda / 4.0;
    }
  }
  return terms;
}

Eigen::VectorXd hamiltonian_diagonal(int n, double lambda) {
  if (n < 1 || n > kDefaultMaxQubits) throw BoundsError("hamiltonian_diagonal: N out of range");
  const StateIndex dim = StateIndex{1} << n;
  Eigen::VectorXd diag(static_cast<Eigen::Index>(dim));
  for (StateIndex i = 0; i < dim; ++i) {
    diag(static_cast<Eigen::Index>(i)) = lambda * count_adjacent_zero_pairs(i, n);
  }
  return diag;
}

Eigen::VectorXd pauli_map_diagonal(const PauliZMap& terms, int n) {
  if (n < 1 || n > kDefaultMaxQubits) throw BoundsError("pauli_map_diagonal: N out of range");
  const StateIndex dim = StateIndex{1} << n;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& [key, coeff] : terms) {
    if (static_cast<int>(key.size()) != n) throw DimensionError("pauli_map_diagonal: key length != N");
    for (StateIndex i = 0; i < dim; ++i) {
      double sign = 1.0;
      for (int j = 0; j < n; ++j) {
        const char p = key[static_cast<std::size_t>(j)];
        if (p == 'Z') {
          if (char_at(i, j)) sign = -sign;
        } else if (p != 'I') {
          throw ParseError("pauli_map_diagonal: only I and Z are allowed");
        }
      }
      diag(static_cast<Eigen::Index>(i)) += coeff * sign;
    }
  }
  return diag;
}

}  // namespace qic
