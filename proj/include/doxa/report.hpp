// Copyright 2026 The Doxa Authors
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

#include <string>
#include <vector>

namespace doxa {

/// Scan coverage of a checker: every candidate examined, or a seeded sample.
enum class ScanMode { kExhaustive, kSampled };

inline const char* to_string(ScanMode mode) {
  return mode == ScanMode::kExhaustive ? "exhaustive" : "sampled";
}

/// One verified statement. `applicable == false` means the statement's
/// hypotheses were not met on this instance, which is reported distinctly
/// from a failed check.
struct CheckResult {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;  // witness on failure, reason when not applicable
};

class TheoremReport {
 public:
  void add_pass(std::string name) {
    checks_.push_back({std::move(name), true, true, {}});
  }
  void add_fail(std::string name, std::string witness) {
    checks_.push_back({std::move(name), true, false, std::move(witness)});
  }
  void add_not_applicable(std::string name, std::string reason) {
    checks_.push_back({std::move(name), false, true, std::move(reason)});
  }
  void add(CheckResult result) { checks_.push_back(std::move(result)); }

  /// True when every applicable check passed.
  bool all_passed() const {
    for (const auto& c : checks_) {
      if (c.applicable && !c.passed) return false;
    }
    return true;
  }
  /// True when additionally no check was skipped for unmet hypotheses.
  bool all_applicable_and_passed() const {
    for (const auto& c : checks_) {
      if (!c.applicable || !c.passed) return false;
    }
    return true;
  }

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace doxa
