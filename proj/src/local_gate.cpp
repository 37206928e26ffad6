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

#include <random>

#include "qic/hamiltonian.hpp"
#include "qic/tl_ops.hpp"

namespace qic {

VerificationReport verify_local_global_equivalence(int n, double tol, int max_qubits) {
  if (n < 2) throw BoundsError("verify_local_global_equivalence: N must be at least 2");
  if (n > max_qubits) {
    throw ResourceGuardError("N=" + std::to_string(n) + " exceeds the embedded-operator limit " +
                             std::to_string(max_qubits));
  }
  const QicBasis basis = enumerate_basis(n);
  const Isometry v = build_isometry(basis);
  VerificationReport report(n, tol);
  report.declare("local_equals_embedded");
  report.declare("local_inverse_equals_embedded");
  for (int g = 0; g <= n - 2; ++g) {
    for (int sign : {+1, -1}) {
      const SparseMatrixXcd b = embed_operator(v, build_abstract_braid(basis, g, sign)).matrix;
      for (std::size_t a = 0; a < basis.size(); ++a) {
        const StateIndex idx = basis.state_index(a);
        Statevector psi = Statevector::from_index(n, idx);
        apply_braid_generator(psi, g, sign);
        const Eigen::VectorXcd expected = b.col(static_cast<Eigen::Index>(idx));
        const double err = (psi.amplitudes() - expected).cwiseAbs().maxCoeff();
        report.record(sign > 0 ? "local_equals_embedded" : "local_inverse_equals_embedded", err);
      }
    }
  }
  return report;
}

namespace {

Statevector random_code_state(const QicBasis& basis, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Statevector psi(basis.num_qubits());
  psi[0] = 0.0;
  for (StateIndex idx : basis.state_indices()) psi[idx] = {normal(rng), normal(rng)};
  psi.normalize();
  return psi;
}

double max_diff(const Statevector& a, const Statevector& b) {
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

}  // namespace

VerificationReport verify_local_algebra(int n, double tol, std::uint64_t seed, int max_qubits) {
  if (n < 2) throw BoundsError("verify_local_algebra: N must be at least 2");
  if (n > max_qubits) {
    throw ResourceGuardError("N=" + std::to_string(n) + " exceeds the statevector limit " +
                             std::to_string(max_qubits));
  }
  const QicBasis basis = enumerate_basis(n, max_qubits);
  const Statevector psi = random_code_state(basis, seed);
  const int gens = n - 1;
  const double z = golden().z;

  VerificationReport report(n, tol);
  for (const char* name : {"norm_preservation", "inverse", "yang_baxter", "far_commutation",
                           "projector_idempotent", "tl_adjacent", "subspace_preservation"}) {
    report.declare(name);
  }

  std::vector<Statevector> braided;
  std::vector<Statevector> projected;
  for (int g = 0; g < gens; ++g) {
    Statevector b = psi;
    apply_braid_generator(b, g, +1);
    report.record("norm_preservation", std::abs(b.norm() - 1.0));
    report.record("subspace_preservation", hamiltonian_energy(b));
    Statevector back = b;
    apply_braid_generator(back, g, -1);
    report.record("inverse", max_diff(back, psi));
    braided.push_back(std::move(b));

    Statevector p = psi;
    apply_local_projector(p, g);
    Statevector pp = p;
    apply_local_projector(pp, g);
    report.record("projector_idempotent", max_diff(pp, p));
    projected.push_back(std::move(p));
  }

  for (int g = 0; g < gens; ++g) {
    for (int h : {g - 1, g + 1}) {
      if (h < 0 || h >= gens) continue;
      Statevector lhs = projected[static_cast<std::size_t>(g)];
      apply_local_projector(lhs, h);
      apply_local_projector(lhs, g);
      Statevector rhs = projected[static_cast<std::size_t>(g)];
      rhs.amplitudes() *= z;
      report.record("tl_adjacent", max_diff(lhs, rhs));
    }
    if (g + 1 < gens) {
      Statevector lhs = braided[static_cast<std::size_t>(g)];
      apply_braid_generator(lhs, g + 1);
      apply_braid_generator(lhs, g);
      Statevector rhs = braided[static_cast<std::size_t>(g + 1)];
      apply_braid_generator(rhs, g);
      apply_braid_generator(rhs, g + 1);
      report.record("yang_baxter", max_diff(lhs, rhs));
    }
    for (int h = g + 2; h < gens; ++h) {
      Statevector lhs = braided[static_cast<std::size_t>(h)];
      apply_braid_generator(lhs, g);
      Statevector rhs = braided[static_cast<std::size_t>(g)];
      apply_braid_generator(rhs, h);
      report.record("far_commutation", max_diff(lhs, rhs));
    }
  }
  return report;
}

CompilationCost compilation_cost_model(const BraidWord& word, int n) {
  word.validate();
  if (word.strands > n) {
    throw BoundsError("compilation_cost_model: word needs " + std::to_string(word.strands) +
                      " strands but N=" + std::to_string(n));
  }
  if (n < 1 || n > 63) throw BoundsError("compilation_cost_model: N out of range");
  CompilationCost cost;
  cost.local_gate_count = word.length();
  cost.local_depth = word.length();
  cost.global_dim = std::uint64_t{1} << n;
  return cost;
}

}  // namespace qic
