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

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qic {

inline constexpr double kDefaultTolerance = 1e-10;

struct CheckResult {
  std::string name;
  double max_abs_error = 0.0;
  /// How many relation instances were evaluated; 0 means vacuous.
  std::size_t instances = 0;
  bool pass = true;
};

/// Named checks with their worst-case error. pass <=> max_abs_error <= tol.
class VerificationReport {
 public:
  VerificationReport(int num_qubits, double tolerance) : num_qubits_(num_qubits), tolerance_(tolerance) {}

  int num_qubits() const noexcept { return num_qubits_; }
  double tolerance() const noexcept { return tolerance_; }
  const std::vector<CheckResult>& checks() const noexcept { return checks_; }

  /// Makes the check appear in the report even if nothing is recorded.
  CheckResult& declare(std::string_view name) {
    auto it = std::find_if(checks_.begin(), checks_.end(),
                           [&](const CheckResult& c) { return c.name == name; });
    if (it != checks_.end()) return *it;
    checks_.push_back(CheckResult{std::string(name), 0.0, 0, true});
    return checks_.back();
  }

  void record(std::string_view name, double error) {
    CheckResult& c = declare(name);
    c.max_abs_error = std::max(c.max_abs_error, error);
    ++c.instances;
    // NaN must fail.
    c.pass = c.max_abs_error <= tolerance_ && error == error;
  }

  const CheckResult* find(std::string_view name) const {
    auto it = std::find_if(checks_.begin(), checks_.end(),
                           [&](const CheckResult& c) { return c.name == name; });
    return it == checks_.end() ? nullptr : &*it;
  }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
  }

  double max_error() const {
    double m = 0.0;
    for (const auto& c : checks_) m = std::max(m, c.max_abs_error);
    return m;
  }

 private:
  int num_qubits_;
  double tolerance_;
  std::vector<CheckResult> checks_;
};

}  // namespace qic
