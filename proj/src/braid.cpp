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

#include "qic/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <numeric>

#include "qic/errors.hpp"

namespace qic {

int BraidWord::writhe() const {
  return std::accumulate(letters.begin(), letters.end(), 0,
                         [](int acc, int l) { return acc + (l > 0 ? 1 : -1); });
}

BraidWord BraidWord::inverse() const {
  BraidWord inv{strands, {}};
  inv.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) inv.letters.push_back(-*it);
  return inv;
}

void BraidWord::validate() const {
  if (strands < 2) throw ParseError("braid word: at least 2 strands are required");
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const int l = letters[i];
    if (l == 0) throw ParseError("braid word: 0 is not a generator", i + 1);
    if (std::abs(l) > strands - 1) {
      throw ParseError("braid word: generator " + std::to_string(l) + " needs more than " +
                           std::to_string(strands) + " strands",
                       i + 1);
    }
  }
}

BraidConvention parse_convention(std::string_view text) {
  if (text == "paper") return BraidConvention::Paper;
  if (text == "kl") return BraidConvention::KauffmanLomonaco;
  throw ParseError("unknown braid convention '" + std::string(text) + "' (expected paper or kl)");
}

std::string to_string(BraidConvention convention) {
  return convention == BraidConvention::Paper ? "paper" : "kl";
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

BraidWord parse_braid_word(std::string_view text, int strands) {
  const auto body = trim(text);
  if (body == "trefoil") return BraidWord{2, {1, 1, 1}};

  if (strands < 2) throw ParseError("braid word: at least 2 strands are required");
  BraidWord word{strands, {}};
  std::size_t token = 0;
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t' || body[pos] == ',')) ++pos;
    if (pos >= body.size()) break;
    std::size_t end = pos;
    while (end < body.size() && body[end] != ' ' && body[end] != '\t' && body[end] != ',') ++end;
    ++token;
    const auto tok = body.substr(pos, end - pos);
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("braid word: malformed token '" + std::string(tok) + "'", token);
    }
    if (value == 0) throw ParseError("braid word: 0 is not a generator", token);
    if (std::abs(value) > strands - 1) {
      throw ParseError("braid word: generator " + std::to_string(value) + " needs more than " +
                           std::to_string(strands) + " strands",
                       token);
    }
    word.letters.push_back(value);
    pos = end;
  }
  return word;
}

std::vector<BraidWord> read_braid_words(std::istream& in) {
  std::vector<BraidWord> words;
  int strands = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    if (view.starts_with("strands:")) {
      const auto value = trim(view.substr(8));
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), strands);
      if (ec != std::errc{} || ptr != value.data() + value.size() || strands < 2) {
        throw ParseError("braid file line " + std::to_string(line_no) + ": bad strands header");
      }
      continue;
    }
    if (strands == 0) {
      throw ParseError("braid file line " + std::to_string(line_no) + ": word before strands header");
    }
    try {
      words.push_back(parse_braid_word(view, strands));
    } catch (const ParseError& e) {
      throw ParseError("braid file line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return words;
}

std::vector<BraidWord> read_braid_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open braid file " + path.string());
  return read_braid_words(in);
}

}  // namespace qic
