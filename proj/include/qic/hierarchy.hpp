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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qic {

/// Deterministic automaton recognizing binary strings that contain none of
/// a set of forbidden words (Aho-Corasick trie with failure links folded
/// into a total transition table). Dead states are pruned from counting.
class ForbiddenWordAutomaton {
 public:
  /// Words must be non-empty, binary, and at least two characters long.
  explicit ForbiddenWordAutomaton(std::span<const std::string> forbidden);

  std::size_t num_states() const noexcept { return next_.size(); }
  int next(std::size_t state, int bit) const { return next_[state][static_cast<std::size_t>(bit)]; }
  bool is_dead(std::size_t state) const { return dead_[state]; }

  /// Number of length-n strings avoiding every forbidden word, for n = 1..n_max.
  /// Throws BoundsError if a count overflows 64 bits.
  std::vector<std::uint64_t> counts(int n_max) const;

 private:
  std::vector<std::array<int, 2>> next_;
  std::vector<bool> dead_;
};

std::uint64_t constrained_dimension(int n, std::span<const std::string> forbidden);

/// a_{n_max} / a_{n_max - 1}. Requires n_max >= 10; throws ZeroDimensionError
/// when the denominator vanishes.
double growth_rate_estimate(std::span<const std::string> forbidden, int n_max);

/// Parses "00,111" (comma or whitespace separated) into a word list.
std::vector<std::string> parse_forbidden_words(const std::string& text);

}  // namespace qic
