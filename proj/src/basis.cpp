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

#include "qic/basis.hpp"

#include <string>
#include <vector>

#include "qic/errors.hpp"

namespace qic {

StateIndex state_index(std::string_view bits) {
  if (bits.size() > 63) throw BoundsError("state_index: string longer than 63 characters");
  StateIndex index = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      index |= StateIndex{1} << i;
    } else if (bits[i] != '0') {
      throw ParseError("state_index: non-binary character in '" + std::string(bits) + "'", i + 1);
    }
  }
  return index;
}

std::string bitstring_of(StateIndex index, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (char_at(index, i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

int count_adjacent_zero_pairs(StateIndex index, int n) {
  int pairs = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (char_at(index, i) == 0 && char_at(index, i + 1) == 0) ++pairs;
  }
  return pairs;
}

bool Codeword::is_valid(std::string_view text) noexcept {
  if (text.empty()) return false;
  for (char c : text) {
    if (c != '0' && c != '1') return false;
  }
  return text.find("00") == std::string_view::npos;
}

Codeword Codeword::parse(std::string_view text) {
  if (text.empty()) throw ParseError("codeword: empty string");
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw ParseError("codeword: non-binary character in '" + std::string(text) + "'", i + 1);
    }
  }
  if (const auto pos = text.find("00"); pos != std::string_view::npos) {
    throw ParseError("codeword: '" + std::string(text) + "' contains a forbidden 00", pos + 1);
  }
  return Codeword(std::string(text));
}

QicBasis::QicBasis(int num_qubits, std::vector<Codeword> codewords)
    : num_qubits_(num_qubits), codewords_(std::move(codewords)) {
  indices_.reserve(codewords_.size());
  labels_.reserve(codewords_.size());
  for (std::size_t a = 0; a < codewords_.size(); ++a) {
    if (codewords_[a].size() != num_qubits_) {
      throw DimensionError("QicBasis: codeword length differs from N");
    }
    const StateIndex idx = codewords_[a].index();
    indices_.push_back(idx);
    labels_.emplace(idx, a);
  }
}

std::optional<std::size_t> QicBasis::label_of(const Codeword& w) const {
  if (w.size() != num_qubits_) return std::nullopt;
  return label_of_index(w.index());
}

std::optional<std::size_t> QicBasis::label_of_index(StateIndex index) const {
  if (auto it = labels_.find(index); it != labels_.end()) return it->second;
  return std::nullopt;
}

namespace {

// Depth-first extension in '0' < '1' order yields lexicographic output.
void extend(std::string& prefix, int n, std::vector<Codeword>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(Codeword::parse(prefix));
    return;
  }
  if (prefix.empty() || prefix.back() != '0') {
    prefix.push_back('0');
    extend(prefix, n, out);
    prefix.pop_back();
  }
  prefix.push_back('1');
  extend(prefix, n, out);
  prefix.pop_back();
}

}  // namespace

QicBasis enumerate_basis(int n, int max_qubits) {
  if (n < 1) throw BoundsError("enumerate_basis: N must be at least 1");
  if (n > max_qubits) {
    throw ResourceGuardError("enumerate_basis: N=" + std::to_string(n) +
                             " exceeds the configured limit " + std::to_string(max_qubits));
  }
  if (n > 62) throw BoundsError("enumerate_basis: N above 62 cannot be indexed");
  std::vector<Codeword> words;
  std::string prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  extend(prefix, n, words);
  return QicBasis(n, std::move(words));
}

Isometry build_isometry(const QicBasis& basis) {
  const auto rows = static_cast<Eigen::Index>(StateIndex{1} << basis.num_qubits());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    triplets.emplace_back(static_cast<Eigen::Index>(basis.state_index(a)),
                          static_cast<Eigen::Index>(a), 1.0);
  }
  Isometry v;
  v.num_qubits = basis.num_qubits();
  v.matrix.resize(rows, cols);
  v.matrix.setFromTriplets(triplets.begin(), triplets.end());
  return v;
}

Isometry build_isometry(int n, int max_qubits) {
  return build_isometry(enumerate_basis(n, max_qubits));
}

}  // namespace qic
