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

#include "doxa/games.hpp"

#include <string>

#include "doxa/errors.hpp"

namespace doxa {

StrategicGame::StrategicGame(std::vector<std::string> players,
                             std::vector<std::vector<std::string>> actions,
                             std::vector<std::vector<Rational>> payoffs)
    : players_(std::move(players)),
      actions_(std::move(actions)),
      payoffs_(std::move(payoffs)) {
  if (players_.empty()) {
    throw ValidationError("players", "at least one player required");
  }
  if (actions_.size() != players_.size()) {
    throw ValidationError("actions", "one action list per player required");
  }
  if (payoffs_.size() != players_.size()) {
    throw ValidationError("payoffs", "one payoff table per player required");
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
    if (actions_[i].empty()) {
      throw ValidationError("actions", "player \"" + players_[i] +
                                           "\" has no actions");
    }
    for (size_t a = 0; a < actions_[i].size(); ++a) {
      if (actions_[i][a].empty()) {
        throw ValidationError("actions", "action labels must be nonempty");
      }
      for (size_t b = a + 1; b < actions_[i].size(); ++b) {
        if (actions_[i][a] == actions_[i][b]) {
          throw ValidationError(
              "actions", "duplicate action \"" + actions_[i][a] +
                             "\" for player \"" + players_[i] + "\"");
        }
      }
    }
    profile_count_ *= static_cast<int>(actions_[i].size());
  }
  for (size_t i = 0; i < players_.size(); ++i) {
    if (static_cast<int>(payoffs_[i].size()) != profile_count_) {
      throw ValidationError("payoffs", "payoff table for player \"" +
                                           players_[i] +
                                           "\" is not total over the profiles");
    }
  }
}

std::optional<int> StrategicGame::player_index(std::string_view id) const {
  for (int i = 0; i < player_count(); ++i) {
    if (players_[i] == id) return i;
  }
  return std::nullopt;
}

int StrategicGame::profile_index(const std::vector<int>& actions) const {
  if (static_cast<int>(actions.size()) != player_count()) {
    throw ValidationError("actions", "profile has wrong player count");
  }
  int index = 0;
  for (int i = 0; i < player_count(); ++i) {
    if (actions[i] < 0 || actions[i] >= action_count(i)) {
      throw ValidationError("actions", "action index out of range");
    }
    index = index * action_count(i) + actions[i];
  }
  return index;
}

std::vector<int> StrategicGame::decode_profile(int index) const {
  std::vector<int> actions(player_count());
  for (int i = player_count() - 1; i >= 0; --i) {
    actions[i] = index % action_count(i);
    index /= action_count(i);
  }
  return actions;
}

int StrategicGame::opponent_profile_count(int player) const {
  int count = 1;
  for (int i = 0; i < player_count(); ++i) {
    if (i != player) count *= action_count(i);
  }
  return count;
}

int StrategicGame::opponent_index(int player,
                                  const std::vector<int>& profile) const {
  int index = 0;
  for (int i = 0; i < player_count(); ++i) {
    if (i == player) continue;
    index = index * action_count(i) + profile[i];
  }
  return index;
}

std::vector<int> StrategicGame::decode_opponent_profile(int player,
                                                        int index) const {
  std::vector<int> actions;
  actions.reserve(player_count() - 1);
  for (int i = 0; i < player_count(); ++i) {
    if (i != player) actions.push_back(0);
  }
  int cursor = static_cast<int>(actions.size()) - 1;
  for (int i = player_count() - 1; i >= 0; --i) {
    if (i == player) continue;
    actions[cursor] = index % action_count(i);
    index /= action_count(i);
    --cursor;
  }
  return actions;
}

std::string StrategicGame::opponent_profile_label(int player,
                                                  int index) const {
  const std::vector<int> opponents = decode_opponent_profile(player, index);
  std::string out;
  int cursor = 0;
  for (int i = 0; i < player_count(); ++i) {
    if (i == player) continue;
    if (!out.empty()) out += ",";
    out += actions_[i][opponents[cursor]];
    ++cursor;
  }
  return out;
}

TypeAssignment::TypeAssignment(
    const StrategicGame& game,
    std::vector<std::vector<std::vector<Rational>>> types)
    : types_(std::move(types)) {
  if (static_cast<int>(types_.size()) != game.player_count()) {
    throw ValidationError("types", "one type list per player required");
  }
  for (int i = 0; i < game.player_count(); ++i) {
    if (types_[i].empty()) {
      throw ValidationError("types", "player \"" + game.player(i) +
                                         "\" has no types");
    }
    const int domain = game.opponent_profile_count(i);
    for (size_t k = 0; k < types_[i].size(); ++k) {
      const auto& pmf = types_[i][k];
      if (static_cast<int>(pmf.size()) != domain) {
        throw ValidationError("types",
                              "type domain must match the opponent profiles");
      }
      Rational total = 0;
      for (const Rational& p : pmf) {
        if (p < 0) throw ValidationError("types", "negative type probability");
        total += p;
      }
      if (total != 1) {
        throw ValidationError("types", "type must sum to exactly 1, got " +
                                           format_rational(total));
      }
      for (size_t k2 = k + 1; k2 < types_[i].size(); ++k2) {
        if (types_[i][k2] == pmf) {
          throw ValidationError("types", "duplicate type for player \"" +
                                             game.player(i) + "\"");
        }
      }
    }
  }
}

ExtensionSpace::ExtensionSpace(EpistemicExtension extension, int max_states)
    : extension_(std::move(extension)) {
  const StrategicGame& game = extension_.game;
  const int players = game.player_count();

  long long action_total = 1;
  long long type_total = 1;
  for (int i = 0; i < players; ++i) {
    action_total *= game.action_count(i);
    type_total *= extension_.types.type_count(i);
    if (action_total * type_total > max_states) {
      throw SizeLimitError("state space would exceed the cap of " +
                           std::to_string(max_states) + " states");
    }
  }
  const int total = static_cast<int>(action_total * type_total);

  std::vector<std::string> labels;
  labels.reserve(total);
  action_coords_.reserve(total);
  type_coords_.reserve(total);

  std::vector<int> action(players, 0);
  std::vector<int> type(players, 0);
  for (int state = 0; state < total; ++state) {
    std::string label;
    for (int i = 0; i < players; ++i) {
      if (i > 0) label += ",";
      label += game.actions(i)[action[i]];
    }
    label += "|";
    for (int i = 0; i < players; ++i) {
      if (i > 0) label += ",";
      label += std::to_string(type[i]);
    }
    labels.push_back(std::move(label));
    action_coords_.push_back(action);
    type_coords_.push_back(type);

    // Advance (action profile, type profile) lexicographically, type
    // profile minor.
    int i = players - 1;
    for (; i >= 0; --i) {
      if (++type[i] < extension_.types.type_count(i)) break;
      type[i] = 0;
    }
    if (i < 0) {
      for (i = players - 1; i >= 0; --i) {
        if (++action[i] < game.action_count(i)) break;
        action[i] = 0;
      }
    }
  }
  space_ = make_space(std::move(labels));
}

int ExtensionSpace::action_of(int state, int player) const {
  return action_coords_.at(state).at(player);
}

int ExtensionSpace::type_of(int state, int player) const {
  return type_coords_.at(state).at(player);
}

int ExtensionSpace::opponent_profile_of(int state, int player) const {
  return extension_.game.opponent_index(player, action_coords_.at(state));
}

ExtensionSpace build_state_space(EpistemicExtension extension,
                                 int max_states) {
  return ExtensionSpace(std::move(extension), max_states);
}

Event event_of_opponent_profile(const ExtensionSpace& ext, int player,
                                int opponent_profile) {
  const int n = ext.space()->size();
  if (opponent_profile < 0 ||
      opponent_profile >= ext.game().opponent_profile_count(player)) {
    throw ValidationError("profile", "unknown opponent profile");
  }
  Event out = Event::none(n);
  for (int state = 0; state < n; ++state) {
    if (ext.opponent_profile_of(state, player) == opponent_profile) {
      out.insert(state);
    }
  }
  return out;
}

Event event_of_type(const ExtensionSpace& ext, int player, int type_index) {
  const int n = ext.space()->size();
  if (type_index < 0 || type_index >= ext.types().type_count(player)) {
    throw ValidationError("types", "unknown type index");
  }
  Event out = Event::none(n);
  for (int state = 0; state < n; ++state) {
    if (ext.type_of(state, player) == type_index) out.insert(state);
  }
  return out;
}

Relation relation_from_types(const ExtensionSpace& ext, int player) {
  const int n = ext.space()->size();
  // Successors depend on the source state only through the player's type
  // coordinate: precompute the union of supported opponent-profile events
  // per type.
  std::vector<Event> per_type(ext.types().type_count(player), Event::none(n));
  for (int k = 0; k < ext.types().type_count(player); ++k) {
    const auto& pmf = ext.types().type(player, k);
    for (int q = 0; q < static_cast<int>(pmf.size()); ++q) {
      if (pmf[q] > 0) per_type[k] |= event_of_opponent_profile(ext, player, q);
    }
  }
  std::vector<Event> rows;
  rows.reserve(n);
  for (int state = 0; state < n; ++state) {
    rows.push_back(per_type[ext.type_of(state, player)]);
  }
  return Relation(ext.space(), std::move(rows));
}

Rational accessibility_degree(const ExtensionSpace& ext, int player, int from,
                              int to) {
  const int type = ext.type_of(from, player);
  const int profile = ext.opponent_profile_of(to, player);
  return ext.types().type(player, type).at(profile);
}

std::optional<C1Violation> check_c1_player(const ExtensionSpace& ext,
                                           int player, const CredalSet& credal,
                                           const C1Options& options) {
  if (!(*credal.space() == *ext.space())) {
    throw ValidationError("credal", "credal set over a different space");
  }
  const int profiles = ext.game().opponent_profile_count(player);
  std::vector<Event> profile_events;
  profile_events.reserve(profiles);
  for (int q = 0; q < profiles; ++q) {
    profile_events.push_back(event_of_opponent_profile(ext, player, q));
  }

  for (int k = 0; k < ext.types().type_count(player); ++k) {
    const auto& pmf = ext.types().type(player, k);
    if (options.one_measure_per_type) {
      bool some_measure_fits = false;
      for (int m = 0; m < credal.measure_count() && !some_measure_fits; ++m) {
        bool fits = true;
        for (int q = 0; q < profiles && fits; ++q) {
          fits = credal.mass(m, profile_events[q]) == pmf[q];
        }
        some_measure_fits = fits;
      }
      if (!some_measure_fits) return C1Violation{player, k, -1};
    } else {
      for (int q = 0; q < profiles; ++q) {
        bool matched = false;
        for (int m = 0; m < credal.measure_count() && !matched; ++m) {
          matched = credal.mass(m, profile_events[q]) == pmf[q];
        }
        if (!matched) return C1Violation{player, k, q};
      }
    }
  }
  return std::nullopt;
}

std::optional<C1Violation> check_c1(const ExtensionSpace& ext,
                                    const std::vector<CredalSet>& credal,
                                    const C1Options& options) {
  if (static_cast<int>(credal.size()) != ext.game().player_count()) {
    throw ValidationError("credal", "one credal set per player required");
  }
  for (int i = 0; i < ext.game().player_count(); ++i) {
    if (auto violation = check_c1_player(ext, i, credal[i], options)) {
      return violation;
    }
  }
  return std::nullopt;
}

TheoremReport verify_extension_theorem(
    const ExtensionSpace& ext,
    const std::vector<std::optional<CredalSet>>& credal,
    const AuditOptions& options, const C1Options& c1_options) {
  TheoremReport report;
  const StrategicGame& game = ext.game();
  if (static_cast<int>(credal.size()) != game.player_count()) {
    throw ValidationError("credal", "one (optional) credal entry per player");
  }

  for (int i = 0; i < game.player_count(); ++i) {
    const std::string who = "(player " + game.player(i) + ")";
    const Relation rel = relation_from_types(ext, i);
    const InfoStructure info = info_from_relation(rel);

    bool hypotheses_hold = credal[i].has_value();
    if (!credal[i]) {
      report.add_not_applicable("hypothesis-B1" + who, "no credal set given");
      report.add_not_applicable("hypothesis-C1" + who, "no credal set given");
    } else {
      if (auto violation = check_b1(*credal[i], info)) {
        hypotheses_hold = false;
        const char* direction =
            violation->direction == B1Direction::kBlindspotWithPositiveMass
                ? "blindspot with positive mass at "
                : "accessible state with all-zero mass at ";
        report.add_fail("hypothesis-B1" + who,
                        direction + ext.space()->label(violation->state));
      } else {
        report.add_pass("hypothesis-B1" + who);
      }
      if (auto violation = check_c1_player(ext, i, *credal[i], c1_options)) {
        hypotheses_hold = false;
        std::string witness = "type " + std::to_string(violation->type_index);
        if (violation->opponent_profile >= 0) {
          witness += ", opponent profile " +
                     game.opponent_profile_label(i, violation->opponent_profile);
        } else {
          witness += ", no single measure matches every profile";
        }
        report.add_fail("hypothesis-C1" + who, witness);
      } else {
        report.add_pass("hypothesis-C1" + who);
      }
    }

    const RelationProperties props = check_relation_properties(rel);
    // Seriality needs only pmf normalization, so it is asserted whether or
    // not the hypotheses hold.
    if (props.serial) {
      report.add_pass("serial" + who);
    } else {
      report.add_fail(
          "serial" + who,
          props.serial_witness
              ? ext.space()->label(*props.serial_witness)
              : std::string());
    }

    if (!hypotheses_hold) {
      const char* reason = credal[i] ? "a hypothesis failed"
                                     : "no credal set given";
      report.add_not_applicable("transitive" + who, reason);
      report.add_not_applicable("euclidean" + who, reason);
      report.add_not_applicable("divisible" + who, reason);
      report.add_not_applicable("kd45" + who, reason);
      continue;
    }

    if (props.transitive) {
      report.add_pass("transitive" + who);
    } else {
      report.add_fail("transitive" + who, "relation is not transitive");
    }
    if (props.euclidean) {
      report.add_pass("euclidean" + who);
    } else {
      report.add_fail("euclidean" + who, "relation is not Euclidean");
    }

    const StructureProperties sprops = check_structure_properties(info);
    if (sprops.divisible) {
      report.add_pass("divisible" + who);
    } else {
      report.add_fail("divisible" + who, "induced structure is not divisible");
    }

    const AxiomReport audit = audit_axioms(info, options);
    if (audit.kd45()) {
      report.add_pass("kd45" + who);
    } else {
      std::string failing;
      if (!audit.axiom_n) failing += "N";
      if (!audit.axiom_k) failing += "K";
      if (!audit.axiom_d) failing += "D";
      if (!audit.axiom_4) failing += "4";
      if (!audit.axiom_5) failing += "5";
      report.add_fail("kd45" + who, "failing axioms: " + failing + " (" +
                                        to_string(audit.mode) + " audit)");
    }
  }
  return report;
}

}  // namespace doxa
