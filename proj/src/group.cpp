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

#include "doxa/group.hpp"

#include <algorithm>
#include <deque>

#include "doxa/errors.hpp"

namespace doxa {

Profile::Profile(StateSpaceRef space, std::vector<std::string> players,
                 std::vector<InfoStructure> structures)
    : space_(std::move(space)),
      players_(std::move(players)),
      structures_(std::move(structures)) {
  if (!space_) throw ValidationError("profile", "null state space");
  if (players_.empty()) {
    throw ValidationError("players", "at least one player required");
  }
  if (players_.size() != structures_.size()) {
    throw ValidationError("players", "one structure per player required");
  }
  for (size_t i = 0; i < players_.size(); ++i) {
    if (players_[i].empty()) {
      throw ValidationError("players", "player ids must be nonempty");
    }
    for (size_t j = i + 1; j < players_.size(); ++j) {
      if (players_[i] == players_[j]) {
        throw ValidationError("players",
                              "duplicate player id \"" + players_[i] + "\"");
      }
    }
    if (!(*structures_[i].space() == *space_)) {
      throw ValidationError("players",
                            "all structures must share the profile's space");
    }
  }
}

std::optional<int> Profile::player_index(std::string_view id) const {
  for (int i = 0; i < player_count(); ++i) {
    if (players_[i] == id) return i;
  }
  return std::nullopt;
}

Relation group_relation(const Profile& profile) {
  const int n = profile.space()->size();
  std::vector<Event> rows(n, Event::none(n));
  for (int i = 0; i < profile.player_count(); ++i) {
    for (int s = 0; s < n; ++s) rows[s] |= profile.structure(i).set(s);
  }
  // Transitive closure by iterated squaring of the adjacency rows.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Event> next = rows;
    for (int s = 0; s < n; ++s) {
      for (int t = rows[s].first(); t >= 0; t = rows[s].next(t)) {
        next[s] |= rows[t];
      }
      if (next[s] != rows[s]) changed = true;
    }
    rows = std::move(next);
  }
  return Relation(profile.space(), std::move(rows));
}

Event group_info(const Profile& profile, int state) {
  return group_relation(profile).successors(state);
}

bool is_common_information(const Profile& profile, const Event& e, int state) {
  return group_info(profile, state).is_subset_of(e);
}

std::optional<Chain> find_chain(const Profile& profile, int from, int to) {
  const int n = profile.space()->size();
  if (from < 0 || from >= n || to < 0 || to >= n) {
    throw ValidationError("chain", "state index out of range");
  }
  // Breadth-first over player-labelled edges; players and successor states
  // expand in index order, so the shortest witness is deterministic. A
  // state is never "found" at depth zero: even from == to needs a link.
  struct Parent {
    int state = -1;
    int player = -1;
  };
  std::vector<Parent> parent(n);
  std::vector<bool> visited(n, false);
  std::deque<int> frontier;
  visited[from] = true;
  frontier.push_back(from);

  auto emit = [&](int found_from, int found_player) {
    Chain chain;
    chain.players.push_back(found_player);
    chain.states.push_back(to);
    int cursor = found_from;
    while (true) {
      chain.states.push_back(cursor);
      if (cursor == from) break;
      chain.players.push_back(parent[cursor].player);
      cursor = parent[cursor].state;
    }
    std::reverse(chain.players.begin(), chain.players.end());
    std::reverse(chain.states.begin(), chain.states.end());
    return chain;
  };

  while (!frontier.empty()) {
    int current = frontier.front();
    frontier.pop_front();
    for (int i = 0; i < profile.player_count(); ++i) {
      const Event& succ = profile.structure(i).set(current);
      for (int s = succ.first(); s >= 0; s = succ.next(s)) {
        if (s == to) return emit(current, i);
        if (!visited[s]) {
          visited[s] = true;
          parent[s] = {current, i};
          frontier.push_back(s);
        }
      }
    }
  }
  return std::nullopt;
}

bool validate_chain(const Profile& profile, const Chain& chain) {
  if (chain.players.empty()) return false;
  if (chain.states.size() != chain.players.size() + 1) return false;
  for (size_t m = 0; m < chain.players.size(); ++m) {
    int player = chain.players[m];
    if (player < 0 || player >= profile.player_count()) return false;
    int here = chain.states[m];
    int there = chain.states[m + 1];
    if (here < 0 || here >= profile.space()->size()) return false;
    if (there < 0 || there >= profile.space()->size()) return false;
    if (!profile.structure(player).set(here).contains(there)) return false;
  }
  return true;
}

TheoremReport verify_group_proposition(const Profile& profile) {
  TheoremReport report;
  const StateSpace& space = *profile.space();
  const int n = space.size();
  const Relation group = group_relation(profile);

  // Item (1): membership in the group relation coincides with the
  // existence of a validating chain.
  {
    bool ok = true;
    std::string witness;
    for (int w = 0; w < n && ok; ++w) {
      for (int v = 0; v < n && ok; ++v) {
        auto chain = find_chain(profile, w, v);
        if (chain.has_value() != group.contains(w, v)) {
          ok = false;
          witness = "(" + space.label(w) + "," + space.label(v) + ")";
        } else if (chain && !validate_chain(profile, *chain)) {
          ok = false;
          witness = "invalid chain for (" + space.label(w) + "," +
                    space.label(v) + ")";
        }
      }
    }
    if (ok) {
      report.add_pass("reachability-chains");
    } else {
      report.add_fail("reachability-chains", witness);
    }
  }

  // Item (2): I^i(w) within I^N(w).
  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < profile.player_count() && ok; ++i) {
      for (int w = 0; w < n && ok; ++w) {
        if (!profile.structure(i).set(w).is_subset_of(group.successors(w))) {
          ok = false;
          witness = "player " + profile.player(i) + " at " + space.label(w);
        }
      }
    }
    if (ok) {
      report.add_pass("player-info-within-group-info");
    } else {
      report.add_fail("player-info-within-group-info", witness);
    }
  }

  // Item (3): I^i(I^N(w)) within I^N(w).
  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < profile.player_count() && ok; ++i) {
      for (int w = 0; w < n && ok; ++w) {
        const Event& group_set = group.successors(w);
        if (!profile.structure(i).image(group_set).is_subset_of(group_set)) {
          ok = false;
          witness = "player " + profile.player(i) + " at " + space.label(w);
        }
      }
    }
    if (ok) {
      report.add_pass("group-info-closed-under-players");
    } else {
      report.add_fail("group-info-closed-under-players", witness);
    }
  }

  // Item (4): the fixed point needs every structure divisible with
  // pairwise equal images.
  {
    bool divisible = true;
    for (int i = 0; i < profile.player_count() && divisible; ++i) {
      divisible = check_structure_properties(profile.structure(i)).divisible;
    }
    bool equal_images = true;
    const Event first_image = profile.structure(0).image_all();
    for (int i = 1; i < profile.player_count() && equal_images; ++i) {
      equal_images = profile.structure(i).image_all() == first_image;
    }
    if (!divisible || !equal_images) {
      report.add_not_applicable(
          "group-info-fixed-point",
          !divisible ? "a structure is not divisible"
                     : "player images differ");
    } else {
      bool ok = true;
      std::string witness;
      for (int i = 0; i < profile.player_count() && ok; ++i) {
        for (int w = 0; w < n && ok; ++w) {
          const Event& group_set = group.successors(w);
          if (profile.structure(i).image(group_set) != group_set) {
            ok = false;
            witness = "player " + profile.player(i) + " at " + space.label(w);
          }
        }
      }
      if (ok) {
        report.add_pass("group-info-fixed-point");
      } else {
        report.add_fail("group-info-fixed-point", witness);
      }
    }
  }

  return report;
}

}  // namespace doxa
