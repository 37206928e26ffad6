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

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace qic {

/// A braid on `strands` strands. Letter +k is sigma_k, -k its inverse,
/// with 1 <= k <= strands - 1.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  int writhe() const;
  std::size_t length() const noexcept { return letters.size(); }

  /// Reversed word with every letter inverted.
  BraidWord inverse() const;

  /// Throws ParseError if a letter is zero or exceeds strands - 1.
  void validate() const;

  bool operator==(const BraidWord&) const = default;
};

/// How sigma_k maps to the QIC generators.
///   Paper:            sigma_k^{+-1} -> B_{k-1}^{+-1}
///   KauffmanLomonaco: sigma_k^{+-1} -> B_{k-1}^{-+1}
enum class BraidConvention { Paper, KauffmanLomonaco };

BraidConvention parse_convention(std::string_view text);
std::string to_string(BraidConvention convention);

/// Exponent of B_{|letter|-1} that a letter contributes under `convention`.
inline int generator_sign(int letter, BraidConvention convention) {
  const int s = letter > 0 ? 1 : -1;
  return convention == BraidConvention::Paper ? s : -s;
}

/// Whitespace/comma separated signed integers, or a preset name. The preset
/// "trefoil" is sigma_1^3 on 2 strands (the `strands` argument is ignored).
/// Errors carry the 1-based token position.
BraidWord parse_braid_word(std::string_view text, int strands);

/// Braid-word file: '#' comments, a "strands: K" header that applies to the
/// words below it, then one word per line.
std::vector<BraidWord> read_braid_words(std::istream& in);
std::vector<BraidWord> read_braid_file(const std::filesystem::path& path);

}  // namespace qic
