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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/SparseCore>

namespace qic {

/// Default cap on the number of qubits for anything that materializes the
/// code basis or a 2^N statevector.
inline constexpr int kDefaultMaxQubits = 24;

using StateIndex = std::uint64_t;

// Bit conventions
// ---------------
// A bitstring is written c_0 c_1 ... c_{N-1}. Qubit label s_k is c_{N-1-k}.
// The statevector index of a string is sum_i c_i 2^i, i.e. the leftmost
// written character is the least significant bit ("011" -> 6).

/// Index of the written bitstring `bits` (characters '0'/'1').
StateIndex state_index(std::string_view bits);

/// Written bitstring of length `n` for a statevector index.
std::string bitstring_of(StateIndex index, int n);

/// Character c_i of the string with statevector index `index`.
inline int char_at(StateIndex index, int i) { return static_cast<int>((index >> i) & 1U); }

/// Number of adjacent "00" pairs in the length-`n` string at `index`.
int count_adjacent_zero_pairs(StateIndex index, int n);

inline bool is_code_index(StateIndex index, int n) {
  return count_adjacent_zero_pairs(index, n) == 0;
}

/// A length-N binary string with no "00" substring.
class Codeword {
 public:
  /// Throws ParseError for non-binary characters, an empty string, or a "00".
  static Codeword parse(std::string_view text);
  static bool is_valid(std::string_view text) noexcept;

  int size() const noexcept { return static_cast<int>(chars_.size()); }
  int bit(int i) const { return chars_.at(static_cast<std::size_t>(i)) == '1' ? 1 : 0; }
  const std::string& str() const noexcept { return chars_; }
  StateIndex index() const { return state_index(chars_); }

  auto operator<=>(const Codeword&) const = default;

 private:
  explicit Codeword(std::string chars) : chars_(std::move(chars)) {}
  std::string chars_;
};

inline StateIndex state_index(const Codeword& w) { return w.index(); }

/// Ordered code basis: all no-"00" strings of length N, lexicographic on the
/// written string. Labels are 0-based positions in that order.
class QicBasis {
 public:
  QicBasis(int num_qubits, std::vector<Codeword> codewords);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t size() const noexcept { return codewords_.size(); }
  const std::vector<Codeword>& codewords() const noexcept { return codewords_; }
  const Codeword& operator[](std::size_t label) const { return codewords_.at(label); }

  StateIndex state_index(std::size_t label) const { return indices_.at(label); }
  std::span<const StateIndex> state_indices() const noexcept { return indices_; }

  std::optional<std::size_t> label_of(const Codeword& w) const;
  std::optional<std::size_t> label_of_index(StateIndex index) const;

 private:
  int num_qubits_;
  std::vector<Codeword> codewords_;
  std::vector<StateIndex> indices_;
  std::unordered_map<StateIndex, std::size_t> labels_;
};

/// All codewords of length `n`. Throws BoundsError for n < 1 and
/// ResourceGuardError for n > max_qubits.
QicBasis enumerate_basis(int n, int max_qubits = kDefaultMaxQubits);

/// The 2^N x F_{N+2} embedding V; column a holds a single 1 at the row of
/// codeword a.
struct Isometry {
  int num_qubits = 0;
  Eigen::SparseMatrix<double> matrix;
};

Isometry build_isometry(const QicBasis& basis);
Isometry build_isometry(int n, int max_qubits = kDefaultMaxQubits);

}  // namespace qic
