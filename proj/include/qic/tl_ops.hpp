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

#include <complex>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "qic/basis.hpp"
#include "qic/constants.hpp"
#include "qic/local_gate.hpp"
#include "qic/verification.hpp"

namespace qic {

using SparseMatrixXcd = Eigen::SparseMatrix<std::complex<double>>;

enum class OperatorKind { Projector, Braid, BraidInverse, Word };

std::string to_string(OperatorKind kind);

/// Dense operator on the ordered code basis (F_{N+2} x F_{N+2}).
struct AbstractOperator {
  int num_qubits = 0;
  Eigen::MatrixXcd matrix;
  OperatorKind kind = OperatorKind::Word;
};

/// Sparse 2^N x 2^N operator supported on the code subspace.
struct EmbeddedOperator {
  int num_qubits = 0;
  SparseMatrixXcd matrix;
};

/// Temperley-Lieb projector P_n, n in [0, N-2]. Each codeword is acted on
/// through its window (c_{n-1}, c_n, c_{n+1}) by `local_projector()`, with a
/// virtual c_{-1} = 1 for n = 0.
AbstractOperator build_abstract_projector(const QicBasis& basis, int n);
AbstractOperator build_abstract_projector(int num_qubits, int n);

/// B_n = R_I P_n + R_tau (I - P_n) for sign +1; its adjoint for sign -1.
AbstractOperator build_abstract_braid(const QicBasis& basis, int n, int sign = 1,
                                      PhaseConvention convention = PhaseConvention::Stated);
AbstractOperator build_abstract_braid(int num_qubits, int n, int sign = 1,
                                      PhaseConvention convention = PhaseConvention::Stated);

/// V M V^dagger.
EmbeddedOperator embed_operator(const Isometry& v, const AbstractOperator& m);

/// Pi_QIC = V V^dagger.
EmbeddedOperator code_space_projector(const Isometry& v);

double max_abs(const Eigen::MatrixXcd& m);
double max_abs(const SparseMatrixXcd& m);

/// Idempotency, Hermiticity, P_n P_{n+-1} P_n = phi^-2 P_n and far
/// commutation for the abstract projectors.
VerificationReport verify_tl(int n, double tol = kDefaultTolerance);

/// The same relations for the embedded P'_n, plus support on Pi_QIC.
VerificationReport verify_embedded_tl(int n, double tol = kDefaultTolerance,
                                      int max_qubits = kEmbeddedMaxQubits);

/// Embedded braid checks: unitarity on the code space, inverses,
/// Yang-Baxter, far commutation, P B = R_I P, and zero Hamiltonian energy
/// of B'_n|q> for every codeword q.
VerificationReport verify_braid_relations(int n, double tol = kDefaultTolerance,
                                          int max_qubits = kEmbeddedMaxQubits);

}  // namespace qic
