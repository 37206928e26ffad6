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

#include "qic/tl_ops.hpp"

#include <cstdlib>
#include <vector>

#include "qic/errors.hpp"
#include "qic/hamiltonian.hpp"
#include "qic/statevector.hpp"

namespace qic {

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Projector:
      return "projector";
    case OperatorKind::Braid:
      return "braid";
    case OperatorKind::BraidInverse:
      return "braid_inverse";
    case OperatorKind::Word:
      return "word";
  }
  return "word";
}

namespace {

void check_generator(int num_qubits, int n) {
  if (num_qubits < 2) throw BoundsError("generators need N >= 2");
  if (n < 0 || n > num_qubits - 2) {
    throw BoundsError("generator index " + std::to_string(n) + " out of range for N=" +
                      std::to_string(num_qubits));
  }
}

void check_embed_guard(int n, int max_qubits) {
  if (n > max_qubits) {
    throw ResourceGuardError("N=" + std::to_string(n) + " exceeds the embedded-operator limit " +
                             std::to_string(max_qubits));
  }
}

}  // namespace

AbstractOperator build_abstract_projector(const QicBasis& basis, int n) {
  const int num_qubits = basis.num_qubits();
  check_generator(num_qubits, n);
  const Eigen::Matrix<double, 8, 8> local = local_projector<double>();
  const auto dim = static_cast<Eigen::Index>(basis.size());

  AbstractOperator p{num_qubits, Eigen::MatrixXcd::Zero(dim, dim), OperatorKind::Projector};
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const StateIndex idx = basis.state_index(a);
    const int left = n == 0 ? 1 : char_at(idx, n - 1);
    const int window = 4 * left + 2 * char_at(idx, n) + char_at(idx, n + 1);
    for (int target = 0; target < 8; ++target) {
      const double entry = local(target, window);
      if (entry == 0.0) continue;
      StateIndex out = idx;
      auto set_char = [&out](int pos, int value) {
        out = (out & ~(StateIndex{1} << pos)) | (StateIndex(value) << pos);
      };
      if (n == 0) {
        if ((target >> 2) != 1) throw Error("boundary window would change the virtual pad");
      } else {
        set_char(n - 1, (target >> 2) & 1);
      }
      set_char(n, (target >> 1) & 1);
      set_char(n + 1, target & 1);
      const auto label = basis.label_of_index(out);
      if (!label) throw Error("projector window maps a codeword outside the code space");
      p.matrix(static_cast<Eigen::Index>(*label), static_cast<Eigen::Index>(a)) = entry;
    }
  }
  return p;
}

AbstractOperator build_abstract_projector(int num_qubits, int n) {
  return build_abstract_projector(enumerate_basis(num_qubits), n);
}

AbstractOperator build_abstract_braid(const QicBasis& basis, int n, int sign,
                                      PhaseConvention convention) {
  if (sign != 1 && sign != -1) throw BoundsError("braid sign must be +1 or -1");
  const AbstractOperator p = build_abstract_projector(basis, n);
  const auto [r_identity, r_tau] = braid_phases<double>(convention);
  const auto dim = p.matrix.rows();
  AbstractOperator b{p.num_qubits, {}, sign > 0 ? OperatorKind::Braid : OperatorKind::BraidInverse};
  b.matrix = r_identity * p.matrix + r_tau * (Eigen::MatrixXcd::Identity(dim, dim) - p.matrix);
  if (sign < 0) b.matrix = b.matrix.adjoint().eval();
  return b;
}

AbstractOperator build_abstract_braid(int num_qubits, int n, int sign, PhaseConvention convention) {
  return build_abstract_braid(enumerate_basis(num_qubits), n, sign, convention);
}

EmbeddedOperator embed_operator(const Isometry& v, const AbstractOperator& m) {
  if (v.num_qubits != m.num_qubits || v.matrix.cols() != m.matrix.rows() ||
      m.matrix.rows() != m.matrix.cols()) {
    throw DimensionError("embed_operator: isometry and operator dimensions disagree");
  }
  const SparseMatrixXcd vc = v.matrix.cast<std::complex<double>>();
  const SparseMatrixXcd ms = m.matrix.sparseView();
  EmbeddedOperator out{v.num_qubits, SparseMatrixXcd(vc * ms * SparseMatrixXcd(vc.adjoint()))};
  out.matrix.makeCompressed();
  return out;
}

EmbeddedOperator code_space_projector(const Isometry& v) {
  const SparseMatrixXcd vc = v.matrix.cast<std::complex<double>>();
  EmbeddedOperator out{v.num_qubits, SparseMatrixXcd(vc * SparseMatrixXcd(vc.adjoint()))};
  out.matrix.makeCompressed();
  return out;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs(const SparseMatrixXcd& m) {
  double best = 0.0;
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrixXcd::InnerIterator it(m, k); it; ++it) best = std::max(best, std::abs(it.value()));
  }
  return best;
}

namespace {

// Shared by the abstract and embedded TL checks.
template <typename Matrix>
void check_tl_relations(VerificationReport& report, const std::vector<Matrix>& p, const std::string& prefix) {
  const double z = golden().z;
  report.declare(prefix + "idempotent");
  report.declare(prefix + "hermitian");
  report.declare(prefix + "tl_adjacent");
  report.declare(prefix + "far_commutation");
  const int count = static_cast<int>(p.size());
  for (int n = 0; n < count; ++n) {
    const Matrix& pn = p[static_cast<std::size_t>(n)];
    report.record(prefix + "idempotent", max_abs(Matrix(pn * pn - pn)));
    report.record(prefix + "hermitian", max_abs(Matrix(Matrix(pn.adjoint()) - pn)));
    for (int m = 0; m < count; ++m) {
      const Matrix& pm = p[static_cast<std::size_t>(m)];
      if (std::abs(n - m) == 1) {
        report.record(prefix + "tl_adjacent", max_abs(Matrix(Matrix(pn * pm) * pn - z * pn)));
      } else if (m > n + 1) {
        report.record(prefix + "far_commutation", max_abs(Matrix(pn * pm - pm * pn)));
      }
    }
  }
}

}  // namespace

VerificationReport verify_tl(int n, double tol) {
  if (n < 2) throw BoundsError("verify_tl: N must be at least 2");
  const QicBasis basis = enumerate_basis(n);
  std::vector<Eigen::MatrixXcd> p;
  for (int g = 0; g <= n - 2; ++g) p.push_back(build_abstract_projector(basis, g).matrix);
  VerificationReport report(n, tol);
  check_tl_relations(report, p, "");
  return report;
}

VerificationReport verify_embedded_tl(int n, double tol, int max_qubits) {
  if (n < 2) throw BoundsError("verify_embedded_tl: N must be at least 2");
  check_embed_guard(n, max_qubits);
  const QicBasis basis = enumerate_basis(n);
  const Isometry v = build_isometry(basis);
  const SparseMatrixXcd pi = code_space_projector(v).matrix;
  std::vector<SparseMatrixXcd> p;
  VerificationReport report(n, tol);
  report.declare("embedded_support");
  for (int g = 0; g <= n - 2; ++g) {
    p.push_back(embed_operator(v, build_abstract_projector(basis, g)).matrix);
    const SparseMatrixXcd& pg = p.back();
    report.record("embedded_support", max_abs(SparseMatrixXcd(pi * pg * pi - pg)));
  }
  check_tl_relations(report, p, "embedded_");
  return report;
}

VerificationReport verify_braid_relations(int n, double tol, int max_qubits) {
  if (n < 2) throw BoundsError("verify_braid_relations: N must be at least 2");
  check_embed_guard(n, max_qubits);
  const QicBasis basis = enumerate_basis(n);
  const Isometry v = build_isometry(basis);
  const SparseMatrixXcd pi = code_space_projector(v).matrix;
  const auto r_identity = golden().r_identity;
  const int gens = n - 1;

  VerificationReport report(n, tol);
  for (const char* name : {"consistency", "unitarity", "inverse", "yang_baxter", "far_commutation",
                           "subspace_preservation"}) {
    report.declare(name);
  }

  std::vector<SparseMatrixXcd> b, b_inv;
  for (int g = 0; g < gens; ++g) {
    const AbstractOperator p = build_abstract_projector(basis, g);
    const AbstractOperator bg = build_abstract_braid(basis, g, +1);
    const AbstractOperator bg_inv = build_abstract_braid(basis, g, -1);
    report.record("consistency", max_abs(Eigen::MatrixXcd(p.matrix * bg.matrix - r_identity * p.matrix)));
    report.record("consistency", max_abs(Eigen::MatrixXcd(bg.matrix * p.matrix - r_identity * p.matrix)));
    b.push_back(embed_operator(v, bg).matrix);
    b_inv.push_back(embed_operator(v, bg_inv).matrix);
  }

  for (int g = 0; g < gens; ++g) {
    const auto& bg = b[static_cast<std::size_t>(g)];
    const SparseMatrixXcd bg_dag = bg.adjoint();
    report.record("unitarity", max_abs(SparseMatrixXcd(bg * bg_dag - pi)));
    report.record("unitarity", max_abs(SparseMatrixXcd(bg_dag * bg - pi)));
    report.record("inverse", max_abs(SparseMatrixXcd(bg * b_inv[static_cast<std::size_t>(g)] - pi)));
    if (g + 1 < gens) {
      const auto& bh = b[static_cast<std::size_t>(g + 1)];
      const SparseMatrixXcd lhs = SparseMatrixXcd(bg * bh) * bg;
      const SparseMatrixXcd rhs = SparseMatrixXcd(bh * bg) * bh;
      report.record("yang_baxter", max_abs(SparseMatrixXcd(lhs - rhs)));
    }
    for (int h = g + 2; h < gens; ++h) {
      const auto& bh = b[static_cast<std::size_t>(h)];
      report.record("far_commutation", max_abs(SparseMatrixXcd(bg * bh - bh * bg)));
    }
    for (std::size_t a = 0; a < basis.size(); ++a) {
      const auto column = static_cast<Eigen::Index>(basis.state_index(a));
      Statevector psi = Statevector::from_amplitudes(n, Eigen::VectorXcd(bg.col(column)));
      report.record("subspace_preservation", hamiltonian_energy(psi));
    }
  }
  return report;
}

}  // namespace qic
