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

#include <algorithm>
#include <cmath>
#include <random>

#include "qic/errors.hpp"
#include "qic/local_gate.hpp"
#include "qic/statevector.hpp"

namespace qic {

std::string to_string(JonesMethod method) { return method == JonesMethod::Exact ? "exact" : "shots"; }

AbstractOperator braid_rep_matrix(const BraidWord& word, BraidConvention convention) {
  word.validate();
  const QicBasis basis = enumerate_basis(word.strands);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  std::vector<Eigen::MatrixXcd> generators[2];
  for (int g = 0; g <= word.strands - 2; ++g) {
    generators[0].push_back(build_abstract_braid(basis, g, +1).matrix);
    generators[1].push_back(build_abstract_braid(basis, g, -1).matrix);
  }
  AbstractOperator m{word.strands, Eigen::MatrixXcd::Identity(dim, dim), OperatorKind::Word};
  for (int letter : word.letters) {
    const int sign = generator_sign(letter, convention);
    const auto g = static_cast<std::size_t>(std::abs(letter) - 1);
    m.matrix = (m.matrix * generators[sign > 0 ? 0 : 1][g]).eval();
  }
  return m;
}

std::complex<double> jones_prefactor(int writhe, int num_qubits) {
  const auto& g = golden();
  const std::complex<double> minus_a3 = -std::pow(g.a, 3);
  return std::pow(minus_a3, -writhe) * std::pow(g.phi, num_qubits - 1) /
         static_cast<double>(fibonacci(num_qubits + 2));
}

JonesResult jones_exact(const BraidWord& word, BraidConvention convention) {
  const AbstractOperator m = braid_rep_matrix(word, convention);
  JonesResult r;
  r.trace = m.matrix.trace();
  r.writhe = word.writhe();
  r.num_qubits = word.strands;
  r.value = jones_prefactor(r.writhe, r.num_qubits) * r.trace;
  r.method = JonesMethod::Exact;
  return r;
}

std::complex<double> jones_theory_trefoil(std::complex<double> t) { return t + std::pow(t, 3) - std::pow(t, 4); }

std::vector<std::complex<double>> braid_diagonal_local(const BraidWord& word, BraidConvention convention) {
  word.validate();
  const QicBasis basis = enumerate_basis(word.strands);
  std::vector<std::complex<double>> diag;
  diag.reserve(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    Statevector psi = Statevector::basis_state(basis[a]);
    // M|q> applies the last letter first.
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
      apply_braid_generator(psi, std::abs(*it) - 1, generator_sign(*it, convention));
    }
    diag.push_back(psi[basis.state_index(a)]);
  }
  return diag;
}

HadamardProbabilities hadamard_probabilities(std::complex<double> m) {
  auto clamp = [](double p) { return std::clamp(p, 0.0, 1.0); };
  return {clamp(0.5 * (1.0 + m.real())), clamp(0.5 * (1.0 + m.imag()))};
}

JonesResult jones_hadamard_limit(const BraidWord& word, BraidConvention convention) {
  JonesResult r;
  for (const auto& m : braid_diagonal_local(word, convention)) {
    const auto p = hadamard_probabilities(m);
    r.trace += std::complex<double>(2.0 * p.real - 1.0, 2.0 * p.imag - 1.0);
  }
  r.writhe = word.writhe();
  r.num_qubits = word.strands;
  r.value = jones_prefactor(r.writhe, r.num_qubits) * r.trace;
  r.method = JonesMethod::Shots;
  r.std_error = 0.0;
  return r;
}

JonesResult jones_shot_estimate(const BraidWord& word, BraidConvention convention, int shots_per_state,
                                std::uint64_t seed) {
  if (shots_per_state < 1) throw BoundsError("jones_shot_estimate: shots_per_state must be >= 1");
  const auto diag = braid_diagonal_local(word, convention);
  JonesResult r;
  double variance = 0.0;
  const double shots = shots_per_state;
  for (std::size_t a = 0; a < diag.size(); ++a) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(a)};
    std::mt19937_64 rng(seq);
    const auto p = hadamard_probabilities(diag[a]);
    std::binomial_distribution<int> draw_re(shots_per_state, p.real);
    std::binomial_distribution<int> draw_im(shots_per_state, p.imag);
    const double k_re = draw_re(rng);
    const double k_im = draw_im(rng);
    r.trace += std::complex<double>(2.0 * k_re / shots - 1.0, 2.0 * k_im / shots - 1.0);
    variance += 4.0 * p.real * (1.0 - p.real) / shots + 4.0 * p.imag * (1.0 - p.imag) / shots;
  }
  r.writhe = word.writhe();
  r.num_qubits = word.strands;
  const auto prefactor = jones_prefactor(r.writhe, r.num_qubits);
  r.value = prefactor * r.trace;
  r.method = JonesMethod::Shots;
  r.shots_per_state = shots_per_state;
  r.std_error = std::abs(prefactor) * std::sqrt(variance);
  return r;
}

double fusion_probability(int num_qubits, int j, int k, const Codeword& q) {
  if (q.size() != num_qubits) throw DimensionError("fusion_probability: codeword length differs from N");
  const QicBasis basis = enumerate_basis(num_qubits, kEmbeddedMaxQubits);
  const Isometry v = build_isometry(basis);
  const SparseMatrixXcd p = embed_operator(v, build_abstract_projector(basis, j)).matrix;
  const SparseMatrixXcd b = embed_operator(v, build_abstract_braid(basis, k, +1)).matrix;
  const Eigen::VectorXcd out = p * Eigen::VectorXcd(b.col(static_cast<Eigen::Index>(q.index())));
  return out.squaredNorm();
}

}  // namespace qic
