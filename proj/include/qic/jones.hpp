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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qic/basis.hpp"
#include "qic/braid.hpp"
#include "qic/tl_ops.hpp"

namespace qic {

enum class JonesMethod { Exact, Shots };

std::string to_string(JonesMethod method);

struct JonesResult {
  std::complex<double> value;
  std::complex<double> trace;
  int writhe = 0;
  int num_qubits = 0;
  JonesMethod method = JonesMethod::Exact;
  std::optional<int> shots_per_state;
  std::optional<double> std_error;
};

/// Product of the letter representations, first letter leftmost, with
/// N = strands. The Paper convention maps sigma_k to B_{k-1}; KL maps it to
/// B_{k-1}^{-1}.
AbstractOperator braid_rep_matrix(const BraidWord& word, BraidConvention convention);

/// (-A^3)^{-w} * phi^{N-1} / F_{N+2}.
std::complex<double> jones_prefactor(int writhe, int num_qubits);

/// V_L(t) at t = e^{-2 pi i/5} from the trace of braid_rep_matrix.
JonesResult jones_exact(const BraidWord& word,
                        BraidConvention convention = BraidConvention::KauffmanLomonaco);

/// t + t^3 - t^4.
std::complex<double> jones_theory_trefoil(std::complex<double> t = golden().t);

/// <q| M |q> for every codeword q (basis order), computed by running the
/// word through the local-gate engine.
std::vector<std::complex<double>> braid_diagonal_local(const BraidWord& word, BraidConvention convention);

/// Success probabilities of the real and imaginary Hadamard tests on a
/// diagonal element m: (1 + Re m)/2 and (1 + Im m)/2.
struct HadamardProbabilities {
  double real = 0.5;
  double imag = 0.5;
};
HadamardProbabilities hadamard_probabilities(std::complex<double> m);

/// Infinite-shot limit of the estimator: every element is recovered from
/// its exact Hadamard-test probabilities as 2p - 1.
JonesResult jones_hadamard_limit(const BraidWord& word,
                                 BraidConvention convention = BraidConvention::KauffmanLomonaco);

/// Shot-based estimate: per codeword, Binomial(shots, p) draws for both
/// Hadamard tests, from an RNG stream derived from (seed, codeword label).
JonesResult jones_shot_estimate(const BraidWord& word, BraidConvention convention, int shots_per_state,
                                std::uint64_t seed);

/// ||P'_j B'_k |q>||^2 on N qubits.
double fusion_probability(int num_qubits, int j, int k, const Codeword& q);

}  // namespace qic
