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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doxa/beliefs.hpp"
#include "doxa/frames.hpp"
#include "doxa/rational.hpp"
#include "doxa/report.hpp"
#include "doxa/state_space.hpp"

namespace doxa {

/// A finite strategic-form game. Action profiles are addressed by a dense
/// mixed-radix index in player-major lexicographic order; payoff tables are
/// total over the profile space.
class StrategicGame {
 public:
  StrategicGame(std::vector<std::string> players,
                std::vector<std::vector<std::string>> actions,
                std::vector<std::vector<Rational>> payoffs);

  int player_count() const noexcept { return static_cast<int>(players_.size()); }
  const std::string& player(int i) const { return players_.at(i); }
  const std::vector<std::string>& players() const noexcept { return players_; }
  std::optional<int> player_index(std::string_view id) const;

  int action_count(int player) const {
    return static_cast<int>(actions_.at(player).size());
  }
  const std::vector<std::string>& actions(int player) const {
    return actions_.at(player);
  }

  int profile_count() const noexcept { return profile_count_; }
  int profile_index(const std::vector<int>& actions) const;
  std::vector<int> decode_profile(int index) const;

  /// |A^{-i}|, the number of opponent action profiles of `player`.
  int opponent_profile_count(int player) const;
  /// Index of a full profile's opponent part in A^{-i} (player-major order
  /// with `player` removed).
  int opponent_index(int player, const std::vector<int>& profile) const;
  std::vector<int> decode_opponent_profile(int player, int index) const;
  /// "a,b,c": opponent action labels joined in player order.
  std::string opponent_profile_label(int player, int index) const;

  const Rational& payoff(int player, int profile_index) const {
    return payoffs_.at(player).at(profile_index);
  }
  const Rational& payoff(int player, const std::vector<int>& profile) const {
    return payoff(player, profile_index(profile));
  }

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<std::vector<Rational>> payoffs_;
  int profile_count_ = 1;
};

/// Finite per-player type lists; a type is an exact pmf over the opponent
/// action profiles of its owner.
class TypeAssignment {
 public:
  /// types[i][k] is a pmf over A^{-i} indexed like
  /// StrategicGame::decode_opponent_profile. Each pmf must sum to exactly
  /// 1; a player's types must be pairwise distinct and nonempty.
  TypeAssignment(const StrategicGame& game,
                 std::vector<std::vector<std::vector<Rational>>> types);

  int type_count(int player) const {
    return static_cast<int>(types_.at(player).size());
  }
  const std::vector<Rational>& type(int player, int k) const {
    return types_.at(player).at(k);
  }

 private:
  std::vector<std::vector<std::vector<Rational>>> types_;
};

struct EpistemicExtension {
  StrategicGame game;
  TypeAssignment types;
};

inline constexpr int kDefaultMaxStates = 4096;

/// The product state space Omega = A x T of an epistemic extension, with
/// labels "a1,..,an|k1,..,kn" (action labels, then 0-based type indices)
/// and coordinate decoding. States are ordered lexicographically, action
/// profile major.
class ExtensionSpace {
 public:
  /// Throws SizeLimitError when |A|*|T| exceeds max_states.
  ExtensionSpace(EpistemicExtension extension,
                 int max_states = kDefaultMaxStates);

  const StateSpaceRef& space() const noexcept { return space_; }
  const StrategicGame& game() const noexcept { return extension_.game; }
  const TypeAssignment& types() const noexcept { return extension_.types; }

  int action_of(int state, int player) const;
  int type_of(int state, int player) const;
  /// Index in A^{-i} of the opponent action coordinates of `state`.
  int opponent_profile_of(int state, int player) const;

 private:
  EpistemicExtension extension_;
  StateSpaceRef space_;
  std::vector<std::vector<int>> action_coords_;  // [state][player]
  std::vector<std::vector<int>> type_coords_;    // [state][player]
};

ExtensionSpace build_state_space(EpistemicExtension extension,
                                 int max_states = kDefaultMaxStates);

/// All states whose opponent-action coordinates (from `player`'s view)
/// equal the given profile of A^{-i}.
Event event_of_opponent_profile(const ExtensionSpace& ext, int player,
                                int opponent_profile);

/// All states whose `player` type coordinate is the given type index.
Event event_of_type(const ExtensionSpace& ext, int player, int type_index);

/// The accessibility relation induced by types: w ~>^i w' iff the type of
/// i in w gives positive probability to the opponent actions of w'.
Relation relation_from_types(const ExtensionSpace& ext, int player);

/// The graded version: the exact probability the type of i in `from`
/// assigns to the opponent-action coordinates of `to`. Positive exactly on
/// the pairs of relation_from_types.
Rational accessibility_degree(const ExtensionSpace& ext, int player, int from,
                              int to);

struct C1Violation {
  int player = -1;
  int type_index = -1;
  int opponent_profile = -1;
};

struct C1Options {
  /// When true, one measure must serve all opponent profiles of a type;
  /// default is the literal per-(type, profile) existential.
  bool one_measure_per_type = false;
};

/// Checks type/global-measure consistency for one player: every type
/// probability t^i(a^-i) is matched exactly by some measure's mass on the
/// corresponding opponent-profile event.
std::optional<C1Violation> check_c1_player(const ExtensionSpace& ext,
                                           int player, const CredalSet& credal,
                                           const C1Options& options = {});

/// check_c1_player over all players. credal must have one entry per player.
std::optional<C1Violation> check_c1(const ExtensionSpace& ext,
                                    const std::vector<CredalSet>& credal,
                                    const C1Options& options = {});

/// Checks the blindspot/zero-mass and type/measure consistency conditions
/// as hypotheses for each player, then (per player, when that player's
/// hypotheses hold) asserts that the type-induced relation is serial,
/// transitive, and Euclidean, the induced structure divisible, and the
/// belief operator a full KD45 audit pass. Seriality is asserted
/// unconditionally since it needs only pmf normalization. A player without
/// a credal set has hypothesis checks reported as not applicable.
TheoremReport verify_extension_theorem(
    const ExtensionSpace& ext,
    const std::vector<std::optional<CredalSet>>& credal,
    const AuditOptions& options = {}, const C1Options& c1_options = {});

}  // namespace doxa
