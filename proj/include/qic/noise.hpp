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

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qic/basis.hpp"
#include "qic/statevector.hpp"

namespace qic {

/// Measurement outcomes keyed by written bitstring (c_0 first).
struct CountsTable {
  int num_qubits = 0;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;

  double frequency(const std::string& bits) const;
};

/// Per-qubit depolarizing strength: after each gate every window qubit is,
/// with probability p, replaced by the maximally mixed state (a uniformly
/// random Pauli from {I, X, Y, Z}).
struct NoiseConfig {
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Generator: index n is B_n (boundary gate for n = 0).
/// Bulk: index f is the 8x8 gate on characters (f, f+1, f+2).
enum class WindowMode { Generator, Bulk };

WindowMode parse_window_mode(std::string_view text);
std::string to_string(WindowMode mode);

struct GateStep {
  int index = 0;
  int sign = 1;
};

/// "0 0 0" or "1,-2": a leading '-' selects the inverse gate ("-0" allowed).
std::vector<GateStep> parse_gate_sequence(std::string_view text);

/// Characters touched by a step.
std::vector<int> step_window(int num_qubits, const GateStep& step, WindowMode mode);
void apply_step(Statevector& psi, const GateStep& step, WindowMode mode);

/// 0 = I, 1 = X, 2 = Y, 3 = Z on written character `pos`.
void apply_pauli(Statevector& psi, int pos, int pauli);

Statevector ideal_final_state(std::string_view initial, const std::vector<GateStep>& steps, WindowMode mode);

/// One Monte Carlo trajectory.
Statevector noisy_trajectory(std::string_view initial, const std::vector<GateStep>& steps, WindowMode mode,
                             double p, std::mt19937_64& rng);

/// Multinomial sample of |amp|^2. Throws NormalizationError for
/// non-normalized input.
CountsTable sample_counts(const Statevector& psi, std::uint64_t shots, std::uint64_t seed);

/// Total `shots` split evenly over `trajectories` (remainder to the first).
CountsTable run_noisy_braid(std::string_view initial, const std::vector<GateStep>& steps, WindowMode mode,
                            const NoiseConfig& noise, int trajectories, std::uint64_t shots);

/// Trajectory-averaged outcome probabilities (no shot noise).
Eigen::VectorXd noisy_mean_probabilities(std::string_view initial, const std::vector<GateStep>& steps,
                                         WindowMode mode, const NoiseConfig& noise, int trajectories);

/// `rounds` noise rounds on every qubit with no gate applied.
CountsTable run_idle_channel(std::string_view initial, int rounds, const NoiseConfig& noise, int trajectories,
                             std::uint64_t shots);

/// Fraction of shots whose bitstring contains "00".
double leakage_fraction(const CountsTable& counts);

struct PostSelection {
  CountsTable counts;
  double retained_fraction = 0.0;
};

/// Keeps only no-"00" outcomes; `counts.shots` becomes the retained total.
/// Throws EmptySelectionError when nothing survives.
PostSelection post_select(const CountsTable& counts);

using Distribution = std::map<std::string, double>;

Distribution to_distribution(const CountsTable& counts);
/// Outcomes of psi with probability above `cutoff`.
Distribution to_distribution(const Statevector& psi, double cutoff = 1e-15);
double total_variation_distance(const Distribution& a, const Distribution& b);

struct DepolarizingFit {
  double p = 0.0;
  double achieved = 0.0;
  int iterations = 0;
};

/// Bisection for the p at which the trajectory-averaged probability of
/// `outcome` equals `target` (common random numbers across evaluations).
/// The mean is then piecewise constant in p, so `achieved` lands within
/// about 1/trajectories of the target.
DepolarizingFit fit_depolarizing_p(std::string_view initial, const std::vector<GateStep>& steps, WindowMode mode,
                                   const std::string& outcome, double target, int trajectories,
                                   std::uint64_t seed);

}  // namespace qic
