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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "doxa/frames.hpp"
#include "doxa/rational.hpp"
#include "doxa/report.hpp"
#include "doxa/state_space.hpp"

namespace doxa {

/// An indeterminate credal state: a finite, deduplicated, nonempty set of
/// exact-rational probability mass functions over the state space.
class CredalSet {
 public:
  /// Throws ValidationError unless every measure is nonnegative, sums to
  /// exactly 1, and matches the space. Duplicate measures are dropped,
  /// keeping first-occurrence order.
  CredalSet(StateSpaceRef space, std::vector<std::vector<Rational>> measures);

  const StateSpaceRef& space() const noexcept { return space_; }
  int measure_count() const noexcept {
    return static_cast<int>(measures_.size());
  }
  const std::vector<Rational>& measure(int k) const { return measures_.at(k); }
  const std::vector<std::vector<Rational>>& measures() const noexcept {
    return measures_;
  }

  Rational mass(int k, const Event& e) const;
  /// States given positive mass by at least one measure.
  Event support_union() const;

 private:
  StateSpaceRef space_;
  std::vector<std::vector<Rational>> measures_;
};

/// BE = { w | I(w) within E }: the states in which the player is informed
/// of E.
Event believes(const InfoStructure& info, const Event& e);

/// Outcome of the N/K/D/4/5 audit of a belief operator. N and K hold for
/// every information structure; D, 4, and 5 carry witnesses when they fail.
struct AxiomReport {
  ScanMode mode = ScanMode::kExhaustive;
  bool axiom_n = false;
  bool axiom_k = false;
  bool axiom_d = false;
  bool axiom_4 = false;
  bool axiom_5 = false;
  std::optional<std::pair<Event, Event>> k_witness;
  std::optional<Event> d_witness;
  std::optional<Event> four_witness;
  std::optional<Event> five_witness;

  bool kd45() const noexcept {
    return axiom_n && axiom_k && axiom_d && axiom_4 && axiom_5;
  }
};

struct AuditOptions {
  /// Exhaustive over all events (and all K pairs) up to this many states;
  /// sampled above it.
  int exhaustive_limit = 8;
  int min_samples = 100000;
  std::uint64_t seed = 0x6473747000000002ULL;
};

/// Audits N over Omega, K over ordered event pairs in the stated form
/// B(E u F) & B(~E) within BF, and D/4/5 over events. In sampled mode the
/// candidate pool always contains the empty event, the universe, every
/// information set, all singletons, and their complements, which is enough
/// to witness any D/4/5 failure; the remainder is seeded random events.
AxiomReport audit_axioms(const InfoStructure& info,
                         const AuditOptions& options = {});

/// Cross-checks audit_axioms against check_structure_properties: D iff
/// viable, 4 iff inclusive, 5 iff mutual, plus N and K outright. A failure
/// indicates an implementation bug.
TheoremReport check_axiom_correspondence(const InfoStructure& info,
                                         const AuditOptions& options = {});

/// Which direction of the blindspot/zero-mass biconditional broke.
enum class B1Direction {
  kBlindspotWithPositiveMass,   // blindspot state, some measure gives it mass
  kAccessibleWithAllZeroMass,   // accessible state, every measure gives 0
};

struct B1Violation {
  int state = -1;
  B1Direction direction = B1Direction::kBlindspotWithPositiveMass;
};

/// Checks the consistency condition between credal state and structure:
/// w is a blindspot iff every measure assigns w probability zero.
/// Returns nullopt on pass.
std::optional<B1Violation> check_b1(const CredalSet& credal,
                                    const InfoStructure& info);

}  // namespace doxa
