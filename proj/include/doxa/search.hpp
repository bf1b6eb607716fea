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
#include <vector>

#include "doxa/decisions.hpp"
#include "doxa/frames.hpp"
#include "doxa/games.hpp"
#include "doxa/group.hpp"
#include "doxa/rng.hpp"
#include "doxa/state_space.hpp"

namespace doxa {

/// All generators are pure functions of their configuration: identical
/// config, identical output.
struct GeneratorConfig {
  int n = 2;
  std::uint64_t seed = 0;
  int players = 2;
  /// Requested blindspot set (must be a proper subset); random when unset.
  std::optional<Event> blindspot_set;
  int max_retries = 256;
};

inline constexpr int kEnumerationCap = 5;

/// Streams all 2^(n*n) relations over "w1".."wn" exactly once, in binary
/// counting order over the pair matrix (bit i*n+j is the pair (wi, wj)).
/// Construction throws CapExceededError for n > kEnumerationCap.
class RelationEnumerator {
 public:
  explicit RelationEnumerator(int n);
  explicit RelationEnumerator(StateSpaceRef space);

  std::uint64_t total() const noexcept { return total_; }
  std::optional<Relation> next();

 private:
  StateSpaceRef space_;
  std::uint64_t total_ = 0;
  std::uint64_t cursor_ = 0;
};

/// A seeded divisible structure with exactly the requested blindspot set,
/// built in canonical form: partition the non-blindspot states into cells,
/// map each non-blindspot state to its own cell and each blindspot state to
/// some cell. Throws ValidationError when the requested set is the whole
/// space. The output re-validates against check_structure_properties and
/// blindspots before being returned.
InfoStructure random_divisible_structure(const GeneratorConfig& config);

struct AgreementInstance {
  Profile profile;
  DecisionFunction decision;
  int actual_state;
};

/// A seeded instance satisfying all four agreement-theorem hypotheses,
/// validated against the independent checkers before emission: per-player
/// divisible structures sharing one blindspot set and one non-blindspot
/// partition (blindspot rows vary by player), a posterior decision function
/// with full support off the blindspots, and an actual state at which the
/// decisions are common information (retry loop; the fallback actual state
/// is the first non-blindspot state, which always satisfies it).
AgreementInstance random_agreement_instance(const GeneratorConfig& config);

struct CounterexampleConfig {
  /// Searched space sizes: 2..n.
  int n = 3;
  /// Emit the known mirrored two-state witness before searching.
  bool include_builtin = true;
  /// Restrict the search to equal-blindspot instances (the theorem then
  /// forbids a find; the search reports absence).
  bool require_equal_blindspots = false;
  /// Upper bound on candidate (structure pair, target, state) evaluations.
  std::uint64_t budget = 2000000;
};

/// The mirrored two-state model: two players whose structures are the
/// figure's structure and its mirror, a uniform prior, target {w2}, actual
/// w1. Hypotheses (1), (3), (4) hold, blindspots differ, and the decisions
/// are 1 and 0.
AgreementInstance mirrored_counterexample();

struct CounterexampleSearchResult {
  std::optional<AgreementInstance> instance;
  std::uint64_t candidates_examined = 0;
};

/// Searches, in increasing n and canonical enumeration order, for instances
/// satisfying hypotheses (1), (3), (4) whose blindspot sets differ (unless
/// configured otherwise) and whose decisions differ.
CounterexampleSearchResult search_agreement_counterexample(
    const CounterexampleConfig& config);

struct ExtensionGeneratorConfig {
  std::uint64_t seed = 0;
  int players = 2;
  int max_actions = 2;
  int max_types = 2;
  int max_states = 64;
  int max_retries = 256;
};

struct ExtensionInstance {
  ExtensionSpace ext;
  std::vector<CredalSet> credal;  // one per player, over ext.space()
};

/// A seeded epistemic extension together with credal sets satisfying both
/// bridge conditions, re-validated via check_b1 and check_c1 before
/// emission. Types of one player share a support; each (type, supported
/// profile) pair contributes a measure placing that probability uniformly
/// on the profile's event and the remainder uniformly on the other
/// non-blindspot states, plus one covering measure uniform over all
/// non-blindspot states.
ExtensionInstance random_extension_instance(
    const ExtensionGeneratorConfig& config);

}  // namespace doxa
