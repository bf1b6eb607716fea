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

#include "doxa/frames.hpp"
#include "doxa/report.hpp"
#include "doxa/state_space.hpp"

namespace doxa {

/// A group of players with one information structure each, all over the
/// same state space.
class Profile {
 public:
  Profile(StateSpaceRef space, std::vector<std::string> players,
          std::vector<InfoStructure> structures);

  const StateSpaceRef& space() const noexcept { return space_; }
  int player_count() const noexcept { return static_cast<int>(players_.size()); }
  const std::string& player(int i) const { return players_.at(i); }
  const std::vector<std::string>& players() const noexcept { return players_; }
  std::optional<int> player_index(std::string_view id) const;
  const InfoStructure& structure(int i) const { return structures_.at(i); }

 private:
  StateSpaceRef space_;
  std::vector<std::string> players_;
  std::vector<InfoStructure> structures_;
};

/// A reachability witness: states[0] ~>^{players[0]} states[1] ~> ... with
/// states.size() == players.size() + 1 and at least one link.
struct Chain {
  std::vector<int> players;
  std::vector<int> states;
  int length() const noexcept { return static_cast<int>(players.size()); }
};

/// Transitive closure of the union of the player relations. Transitive,
/// contains every player relation, and is the least such relation.
Relation group_relation(const Profile& profile);

/// Image of `state` under the group relation.
Event group_info(const Profile& profile, int state);

/// True when group_info(profile, state) is contained in `e`.
bool is_common_information(const Profile& profile, const Event& e, int state);

/// A shortest witnessing chain from `from` to `to`, or nullopt when (from,
/// to) is not in the group relation. Deterministic: breadth-first search
/// expanding players and successor states in index order.
std::optional<Chain> find_chain(const Profile& profile, int from, int to);

/// Checks every link of the chain against the respective player relation.
bool validate_chain(const Profile& profile, const Chain& chain);

/// Re-validates the group-information facts on this instance: chain
/// reachability, per-player inclusion in the group information, closure of
/// the group information under every player image, and (when all structures
/// are divisible with pairwise equal images) the fixed point
/// I^N(w) = I^i(I^N(w)). Unmet hypotheses are reported distinctly.
TheoremReport verify_group_proposition(const Profile& profile);

}  // namespace doxa
