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

#include "qic/noise.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "qic/errors.hpp"
#include "qic/local_gate.hpp"

namespace qic {

double CountsTable::frequency(const std::string& bits) const {
  if (shots == 0) return 0.0;
  const auto it = counts.find(bits);
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(shots);
}

WindowMode parse_window_mode(std::string_view text) {
  if (text == "bulk") return WindowMode::Bulk;
  if (text == "generator") return WindowMode::Generator;
  throw ParseError("unknown window mode '" + std::string(text) + "' (expected bulk or generator)");
}

std::string to_string(WindowMode mode) { return mode == WindowMode::Bulk ? "bulk" : "generator"; }

std::vector<GateStep> parse_gate_sequence(std::string_view text) {
  std::vector<GateStep> steps;
  std::size_t token = 0, pos = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ','; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    ++token;
    auto tok = text.substr(pos, end - pos);
    GateStep step;
    if (tok.front() == '-') {
      step.sign = -1;
      tok.remove_prefix(1);
    } else if (tok.front() == '+') {
      tok.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), step.index);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || step.index < 0) {
      throw ParseError("gate sequence: malformed token '" + std::string(text.substr(pos, end - pos)) + "'",
                       token);
    }
    steps.push_back(step);
    pos = end;
  }
  return steps;
}

std::vector<int> step_window(int num_qubits, const GateStep& step, WindowMode mode) {
  if (mode == WindowMode::Bulk) {
    if (step.index + 2 >= num_qubits) {
      throw BoundsError("bulk window " + std::to_string(step.index) + " does not fit N=" +
                        std::to_string(num_qubits));
    }
    return {step.index, step.index + 1, step.index + 2};
  }
  const auto plan = GateApplicationPlan::make(num_qubits, step.index);
  return {plan.window.begin(), plan.window.begin() + plan.width};
}

void apply_step(Statevector& psi, const GateStep& step, WindowMode mode) {
  if (mode == WindowMode::Bulk) {
    apply_bulk_window(psi, step.index, step.sign);
  } else {
    apply_braid_generator(psi, step.index, step.sign);
  }
}

void apply_pauli(Statevector& psi, int pos, int pauli) {
  if (pos < 0 || pos >= psi.num_qubits()) throw BoundsError("apply_pauli: position out of range");
  if (pauli == 0) return;
  const StateIndex bit = StateIndex{1} << pos;
  const std::complex<double> i_unit(0.0, 1.0);
  for (StateIndex k = 0; k < psi.dim(); ++k) {
    if (k & bit) continue;
    auto& a0 = psi[k];
    auto& a1 = psi[k | bit];
    switch (pauli) {
      case 1:
        std::swap(a0, a1);
        break;
      case 2: {
        // Y|0> = i|1>, Y|1> = -i|0>
        const auto new0 = -i_unit * a1;
        const auto new1 = i_unit * a0;
        a0 = new0;
        a1 = new1;
        break;
      }
      case 3:
        a1 = -a1;
        break;
      default:
        throw BoundsError("apply_pauli: pauli must be 0..3");
    }
  }
}

Statevector ideal_final_state(std::string_view initial, const std::vector<GateStep>& steps, WindowMode mode) {
  Statevector psi = Statevector::from_bitstring(initial);
  for (const auto& step : steps) apply_step(psi, step, mode);
  return psi;
}

namespace {

void depolarize(Statevector& psi, const std::vector<int>& chars, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int c : chars) {
    if (coin(rng) < p) apply_pauli(psi, c, pick(rng));
  }
}

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw BoundsError("noise probability must lie in [0, 1]");
}

void merge(CountsTable& into, const CountsTable& from) {
  for (const auto& [bits, c] : from.counts) into.counts[bits] += c;
  into.shots += from.shots;
}

}  // namespace

Statevector noisy_trajectory(std::string_view initial, const std::vector<GateStep>& steps, WindowMode mode,
                             double p, std::mt19937_64& rng) {
  check_p(p);
  Statevector psi = Statevector::from_bitstring(initial);
  for (const auto& step : steps) {
    apply_step(psi, step, mode);
    if (p > 0.0) depolarize(psi, step_window(psi.num_qubits(), step, mode), p, rng);
  }
  return psi;
}

CountsTable sample_counts(const Statevector& psi, std::uint64_t shots, std::uint64_t seed) {
  require_normalized(psi, "sample_counts");
  CountsTable table;
  table.num_qubits = psi.num_qubits();
  if (shots == 0) return table;
  const Eigen::VectorXd probs = psi.probabilities();
  std::discrete_distribution<StateIndex> dist(probs.data(), probs.data() + probs.size());
  auto rng = stream(seed, 0);
  std::map<StateIndex, std::uint64_t> tally;
  for (std::uint64_t s = 0; s < shots; ++s) ++tally[dist(rng)];
  for (const auto& [idx, c] : tally) table.counts[bitstring_of(idx, psi.num_qubits())] = c;
  table.shots = shots;
  return table;
}

CountsTable run_noisy_braid(std::string_view initial, const std::vector<GateStep>& steps, WindowMode mode,
                            const NoiseConfig& noise, int trajectories, std::uint64_t shots) {
  if (trajectories < 1) throw BoundsError("run_noisy_braid: at least one trajectory is required");
  check_p(noise.p);
  CountsTable total;
  total.num_qubits = static_cast<int>(initial.size());
  const auto traj = static_cast<std::uint64_t>(trajectories);
  for (std::uint64_t t = 0; t < traj; ++t) {
    const std::uint64_t share = shots / traj + (t < shots % traj ? 1 : 0);
    auto rng = stream(noise.seed, 2 * t);
    const Statevector psi = noisy_trajectory(initial, steps, mode, noise.p, rng);
    if (share == 0) continue;
    merge(total, sample_counts(psi, share, noise.seed ^ (0x9e3779b97f4a7c15ULL * (t + 1))));
  }
  return total;
}

Eigen::VectorXd noisy_mean_probabilities(std::string_view initial, const std::vector<GateStep>& steps,
                                         WindowMode mode, const NoiseConfig& noise, int trajectories) {
  if (trajectories < 1) throw BoundsError("noisy_mean_probabilities: at least one trajectory is required");
  Eigen::VectorXd mean;
  for (int t = 0; t < trajectories; ++t) {
    auto rng = stream(noise.seed, 2 * static_cast<std::uint64_t>(t));
    const Eigen::VectorXd probs = noisy_trajectory(initial, steps, mode, noise.p, rng).probabilities();
    if (t == 0) {
      mean = probs;
    } else {
      mean += probs;
    }
  }
  return mean / static_cast<double>(trajectories);
}

CountsTable run_idle_channel(std::string_view initial, int rounds, const NoiseConfig& noise, int trajectories,
                             std::uint64_t shots) {
  if (trajectories < 1) throw BoundsError("run_idle_channel: at least one trajectory is required");
  if (rounds < 0) throw BoundsError("run_idle_channel: rounds must be non-negative");
  check_p(noise.p);
  const int n = static_cast<int>(initial.size());
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  CountsTable total;
  total.num_qubits = n;
  const auto traj = static_cast<std::uint64_t>(trajectories);
  for (std::uint64_t t = 0; t < traj; ++t) {
    const std::uint64_t share = shots / traj + (t < shots % traj ? 1 : 0);
    auto rng = stream(noise.seed, 2 * t);
    Statevector psi = Statevector::from_bitstring(initial);
    for (int r = 0; r < rounds; ++r) depolarize(psi, all, noise.p, rng);
    if (share == 0) continue;
    merge(total, sample_counts(psi, share, noise.seed ^ (0x9e3779b97f4a7c15ULL * (t + 1))));
  }
  return total;
}

double leakage_fraction(const CountsTable& counts) {
  if (counts.shots == 0) throw BoundsError("leakage_fraction: table has no shots");
  std::uint64_t leaked = 0;
  for (const auto& [bits, c] : counts.counts) {
    if (bits.find("00") != std::string::npos) leaked += c;
  }
  return static_cast<double>(leaked) / static_cast<double>(counts.shots);
}

PostSelection post_select(const CountsTable& counts) {
  PostSelection out;
  out.counts.num_qubits = counts.num_qubits;
  for (const auto& [bits, c] : counts.counts) {
    if (bits.find("00") == std::string::npos && c > 0) {
      out.counts.counts[bits] = c;
      out.counts.shots += c;
    }
  }
  if (out.counts.shots == 0) throw EmptySelectionError("post_select: every outcome contains 00");
  out.retained_fraction = static_cast<double>(out.counts.shots) / static_cast<double>(counts.shots);
  return out;
}

Distribution to_distribution(const CountsTable& counts) {
  Distribution d;
  for (const auto& [bits, c] : counts.counts) d[bits] = counts.frequency(bits);
  return d;
}

Distribution to_distribution(const Statevector& psi, double cutoff) {
  Distribution d;
  const Eigen::VectorXd probs = psi.probabilities();
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    if (probs(i) > cutoff) d[bitstring_of(static_cast<StateIndex>(i), psi.num_qubits())] = probs(i);
  }
  return d;
}

double total_variation_distance(const Distribution& a, const Distribution& b) {
  std::set<std::string> keys;
  for (const auto& [k, v] : a) keys.insert(k);
  for (const auto& [k, v] : b) keys.insert(k);
  double sum = 0.0;
  for (const auto& k : keys) {
    const auto ia = a.find(k);
    const auto ib = b.find(k);
    sum += std::abs((ia == a.end() ? 0.0 : ia->second) - (ib == b.end() ? 0.0 : ib->second));
  }
  return 0.5 * sum;
}

DepolarizingFit fit_depolarizing_p(std::string_view initial, const std::vector<GateStep>& steps, WindowMode mode,
                                   const std::string& outcome, double target, int trajectories,
                                   std::uint64_t seed) {
  const auto idx = static_cast<Eigen::Index>(state_index(outcome));
  if (static_cast<int>(outcome.size()) != static_cast<int>(initial.size())) {
    throw DimensionError("fit_depolarizing_p: outcome length differs from the register");
  }
  auto prob_at = [&](double p) {
    return noisy_mean_probabilities(initial, steps, mode, NoiseConfig{p, seed}, trajectories)(idx);
  };
  double lo = 0.0, hi = 1.0;
  double f_lo = prob_at(lo), f_hi = prob_at(hi);
  if ((target - f_lo) * (target - f_hi) > 0.0) {
    throw BoundsError("fit_depolarizing_p: target probability is not bracketed by p in [0, 1]");
  }
  DepolarizingFit fit;
  for (fit.iterations = 0; fit.iterations < 40; ++fit.iterations) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = prob_at(mid);
    if ((f_mid - target) * (f_lo - target) > 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-6) break;
  }
  fit.p = 0.5 * (lo + hi);
  fit.achieved = prob_at(fit.p);
  return fit;
}

}  // namespace qic
