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

#include "qic/hierarchy.hpp"

#include <limits>
#include <queue>
#include <sstream>

#include "qic/errors.hpp"

namespace qic {

ForbiddenWordAutomaton::ForbiddenWordAutomaton(std::span<const std::string> forbidden) {
  if (forbidden.empty()) throw Error("forbidden word set is empty");

  // Trie.
  std::vector<std::array<int, 2>> child;
  std::vector<bool> terminal;
  child.push_back({-1, -1});
  terminal.push_back(false);
  for (const auto& word : forbidden) {
    if (word.size() < 2) throw Error("forbidden word '" + word + "' is shorter than 2");
    std::size_t node = 0;
    for (char c : word) {
      if (c != '0' && c != '1') throw ParseError("forbidden word '" + word + "' is not binary");
      const auto b = static_cast<std::size_t>(c - '0');
      if (child[node][b] < 0) {
        child[node][b] = static_cast<int>(child.size());
        child.push_back({-1, -1});
        terminal.push_back(false);
      }
      node = static_cast<std::size_t>(child[node][b]);
    }
    terminal[node] = true;
  }

  // Breadth-first failure links; goto table completed in place.
  next_ = child;
  dead_ = terminal;
  std::vector<int> fail(child.size(), 0);
  std::queue<std::size_t> queue;
  for (std::size_t b = 0; b < 2; ++b) {
    if (next_[0][b] < 0) {
      next_[0][b] = 0;
    } else {
      fail[static_cast<std::size_t>(next_[0][b])] = 0;
      queue.push(static_cast<std::size_t>(next_[0][b]));
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop();
    dead_[u] = dead_[u] || dead_[static_cast<std::size_t>(fail[u])];
    for (std::size_t b = 0; b < 2; ++b) {
      const int v = child[u][b];
      if (v < 0) {
        next_[u][b] = next_[static_cast<std::size_t>(fail[u])][b];
      } else {
        fail[static_cast<std::size_t>(v)] = next_[static_cast<std::size_t>(fail[u])][b];
        queue.push(static_cast<std::size_t>(v));
      }
    }
  }
}

std::vector<std::uint64_t> ForbiddenWordAutomaton::counts(int n_max) const {
  if (n_max < 1) throw BoundsError("counts: N must be at least 1");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> ways(num_states(), 0), step(num_states(), 0);
  ways[0] = 1;
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    std::fill(step.begin(), step.end(), 0);
    for (std::size_t s = 0; s < num_states(); ++s) {
      if (ways[s] == 0) continue;
      for (int b = 0; b < 2; ++b) {
        const auto t = static_cast<std::size_t>(next(s, b));
        if (dead_[t]) continue;
        if (step[t] > kMax - ways[s]) throw BoundsError("constrained_dimension: count overflows 64 bits");
        step[t] += ways[s];
      }
    }
    std::swap(ways, step);
    std::uint64_t total = 0;
    for (auto w : ways) {
      if (total > kMax - w) throw BoundsError("constrained_dimension: count overflows 64 bits");
      total += w;
    }
    out.push_back(total);
  }
  return out;
}

std::uint64_t constrained_dimension(int n, std::span<const std::string> forbidden) {
  return ForbiddenWordAutomaton(forbidden).counts(n).back();
}

double growth_rate_estimate(std::span<const std::string> forbidden, int n_max) {
  if (n_max < 10) throw BoundsError("growth_rate_estimate: N_max must be at least 10");
  const auto a = ForbiddenWordAutomaton(forbidden).counts(n_max);
  const auto num = a[static_cast<std::size_t>(n_max - 1)];
  const auto den = a[static_cast<std::size_t>(n_max - 2)];
  if (den == 0) throw ZeroDimensionError("growth_rate_estimate: every string is forbidden");
  return static_cast<double>(num) / static_cast<double>(den);
}

std::vector<std::string> parse_forbidden_words(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == ',' || c == ';') c = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.empty()) throw ParseError("no forbidden words given");
  return words;
}

}  // namespace qic
