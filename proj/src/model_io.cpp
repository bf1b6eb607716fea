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

#include "doxa/model_io.hpp"

#include <json.hpp>

#include <set>

#include "doxa/errors.hpp"
#include "doxa/rational.hpp"

namespace doxa {
namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

void require_keys(const Json& object, const std::string& path,
                  const std::set<std::string>& allowed) {
  for (const auto& [key, value] : object.items()) {
    (void)value;
    if (!allowed.count(key)) {
      throw ValidationError(path, "unknown key \"" + key + "\"");
    }
  }
}

const Json& require_field(const Json& object, const std::string& path,
                          const char* key) {
  if (!object.contains(key)) {
    throw ValidationError(path, std::string("missing required key \"") + key +
                                    "\"");
  }
  return object.at(key);
}

std::vector<std::string> string_list(const Json& value,
                                     const std::string& path) {
  if (!value.is_array()) throw ValidationError(path, "expected an array");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw ValidationError(path, "expected an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

Rational rational_field(const Json& value, const std::string& path) {
  if (!value.is_string()) {
    throw ValidationError(path,
                          "probabilities must be \"p/q\" strings, not numbers");
  }
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ValidationError& e) {
    throw ValidationError(path, e.what());
  }
}

Event event_from_labels(const Json& value, const std::string& path,
                        const StateSpace& space) {
  Event out = Event::none(space.size());
  for (const std::string& label : string_list(value, path)) {
    auto state = space.find(label);
    if (!state) {
      throw ValidationError(path, "unknown state label \"" + label + "\"");
    }
    out.insert(*state);
  }
  return out;
}

// Values that parse as "p/q" are rationals; everything else is an opaque
// label.
DecisionValue decision_value(const Json& value, const std::string& path) {
  if (!value.is_string()) {
    throw ValidationError(path, "decision values must be strings");
  }
  const std::string text = value.get<std::string>();
  if (looks_like_rational(text)) {
    return DecisionValue::rational(parse_rational(text));
  }
  return DecisionValue::label(text);
}

std::vector<Rational> pmf_from_object(const Json& value,
                                      const std::string& path,
                                      const StateSpace& space) {
  if (!value.is_object()) {
    throw ValidationError(path, "expected an object of state -> \"p/q\"");
  }
  std::vector<Rational> pmf(space.size(), Rational(0));
  for (const auto& [label, mass] : value.items()) {
    auto state = space.find(label);
    if (!state) {
      throw ValidationError(path, "unknown state label \"" + label + "\"");
    }
    pmf[*state] = rational_field(mass, path + "/" + label);
  }
  return pmf;
}

CredalSet credal_from_json(const Json& value, const std::string& path,
                           const StateSpaceRef& space) {
  if (!value.is_array() || value.empty()) {
    throw ValidationError(path, "expected a nonempty array of measures");
  }
  std::vector<std::vector<Rational>> measures;
  for (size_t m = 0; m < value.size(); ++m) {
    measures.push_back(pmf_from_object(
        value[m], path + "[" + std::to_string(m) + "]", *space));
  }
  try {
    return CredalSet(space, std::move(measures));
  } catch (const ValidationError& e) {
    throw ValidationError(path, e.what());
  }
}

Json credal_to_json(const CredalSet& credal) {
  Json out = Json::array();
  for (const auto& pmf : credal.measures()) {
    Json measure = Json::object();
    for (int s = 0; s < credal.space()->size(); ++s) {
      measure[credal.space()->label(s)] = format_rational(pmf[s]);
    }
    out.push_back(std::move(measure));
  }
  return out;
}

std::vector<std::string> event_labels(const Event& e, const StateSpace& space) {
  std::vector<std::string> out;
  for (int s = e.first(); s >= 0; s = e.next(s)) out.push_back(space.label(s));
  return out;
}

}  // namespace

ModelFile parse_model(const std::string& text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ValidationError("", "model must be an object");
  require_keys(doc, "",
               {"states", "players", "relations", "info", "credal", "decision",
                "actual"});

  ModelFile model;
  model.space = make_space(string_list(require_field(doc, "", "states"),
                                       "states"));
  const StateSpace& space = *model.space;
  model.players = string_list(require_field(doc, "", "players"), "players");
  if (model.players.empty()) {
    throw ValidationError("players", "at least one player required");
  }

  const Json relations = doc.value("relations", Json::object());
  const Json info = doc.value("info", Json::object());
  for (const Json* section : {&relations, &info}) {
    if (!section->is_object()) {
      throw ValidationError("relations",
                            "relations/info must map player -> data");
    }
    for (const auto& [player, data] : section->items()) {
      (void)data;
      bool known = false;
      for (const auto& id : model.players) known = known || id == player;
      if (!known) {
        throw ValidationError("relations",
                              "unknown player \"" + player + "\"");
      }
    }
  }

  for (const std::string& player : model.players) {
    const bool has_relation = relations.contains(player);
    const bool has_info = info.contains(player);
    if (has_relation == has_info) {
      throw ValidationError(
          "players", "player \"" + player +
                         "\" needs exactly one of a relation or an info map");
    }
    if (has_relation) {
      const Json& rows = relations.at(player);
      const std::string path = "relations/" + player;
      if (!rows.is_array()) {
        throw ValidationError(path, "expected an array of [from, to] pairs");
      }
      std::vector<std::pair<int, int>> pairs;
      for (const auto& pair : rows) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
            !pair[1].is_string()) {
          throw ValidationError(path, "expected [from, to] label pairs");
        }
        auto from = space.find(pair[0].get<std::string>());
        auto to = space.find(pair[1].get<std::string>());
        if (!from || !to) {
          throw ValidationError(path, "unknown state label in pair");
        }
        pairs.emplace_back(*from, *to);
      }
      model.structures.push_back(
          info_from_relation(Relation::from_pairs(model.space, pairs)));
      model.given_as_relation.push_back(true);
    } else {
      const Json& sets = info.at(player);
      const std::string path = "info/" + player;
      if (!sets.is_object()) {
        throw ValidationError(path, "expected an object of state -> [labels]");
      }
      std::vector<Event> rows(space.size(), Event::none(space.size()));
      std::vector<bool> seen(space.size(), false);
      for (const auto& [label, members] : sets.items()) {
        auto state = space.find(label);
        if (!state) {
          throw ValidationError(path, "unknown state label \"" + label + "\"");
        }
        rows[*state] = event_from_labels(members, path + "/" + label, space);
        seen[*state] = true;
      }
      for (int s = 0; s < space.size(); ++s) {
        if (!seen[s]) {
          throw ValidationError(
              path, "info map must be total; missing state \"" +
                        space.label(s) + "\"");
        }
      }
      model.structures.push_back(InfoStructure(model.space, std::move(rows)));
      model.given_as_relation.push_back(false);
    }
  }

  model.credal.assign(model.players.size(), std::nullopt);
  if (doc.contains("credal")) {
    const Json& credal = doc.at("credal");
    if (!credal.is_object()) {
      throw ValidationError("credal", "expected an object of player -> array");
    }
    for (const auto& [player, measures] : credal.items()) {
      bool found = false;
      for (size_t i = 0; i < model.players.size(); ++i) {
        if (model.players[i] == player) {
          model.credal[i] = credal_from_json(measures, "credal/" + player,
                                             model.space);
          found = true;
        }
      }
      if (!found) {
        throw ValidationError("credal", "unknown player \"" + player + "\"");
      }
    }
  }

  if (doc.contains("decision")) {
    const Json& decision = doc.at("decision");
    if (!decision.is_object()) {
      throw ValidationError("decision", "expected an object");
    }
    require_keys(decision, "decision", {"posterior", "table"});
    if (decision.contains("posterior") == decision.contains("table")) {
      throw ValidationError("decision",
                            "exactly one of \"posterior\" or \"table\"");
    }
    if (decision.contains("posterior")) {
      const Json& posterior = decision.at("posterior");
      require_keys(posterior, "decision/posterior", {"prior", "target"});
      std::vector<Rational> prior =
          pmf_from_object(require_field(posterior, "decision/posterior",
                                        "prior"),
                          "decision/posterior/prior", space);
      Event target =
          event_from_labels(require_field(posterior, "decision/posterior",
                                          "target"),
                            "decision/posterior/target", space);
      try {
        model.decision = DecisionFunction::posterior(std::move(prior),
                                                     std::move(target));
      } catch (const ValidationError& e) {
        throw ValidationError("decision/posterior", e.what());
      }
    } else {
      const Json& table = decision.at("table");
      require_keys(table, "decision/table", {"entries", "default"});
      std::map<Event, DecisionValue> entries;
      const Json& rows = require_field(table, "decision/table", "entries");
      if (!rows.is_array()) {
        throw ValidationError("decision/table/entries", "expected an array");
      }
      for (size_t r = 0; r < rows.size(); ++r) {
        const std::string path =
            "decision/table/entries[" + std::to_string(r) + "]";
        const Json& row = rows[r];
        if (!row.is_object()) throw ValidationError(path, "expected an object");
        require_keys(row, path, {"event", "value"});
        Event event = event_from_labels(require_field(row, path, "event"),
                                        path + "/event", space);
        if (!entries
                 .emplace(std::move(event),
                          decision_value(require_field(row, path, "value"),
                                         path + "/value"))
                 .second) {
          throw ValidationError(path, "duplicate event in table");
        }
      }
      std::optional<DecisionValue> fallback;
      if (table.contains("default")) {
        fallback = decision_value(table.at("default"),
                                  "decision/table/default");
      }
      model.decision = DecisionFunction::table(std::move(entries),
                                               std::move(fallback));
    }
  }

  if (doc.contains("actual")) {
    const Json& actual = doc.at("actual");
    if (!actual.is_string()) {
      throw ValidationError("actual", "expected a state label");
    }
    auto state = space.find(actual.get<std::string>());
    if (!state) {
      throw ValidationError("actual", "unknown state label \"" +
                                          actual.get<std::string>() + "\"");
    }
    model.actual = *state;
  }

  return model;
}

std::string serialize_model(const ModelFile& model) {
  const StateSpace& space = *model.space;
  Json doc = Json::object();
  doc["states"] = space.labels();
  doc["players"] = model.players;

  Json relations = Json::object();
  Json info = Json::object();
  for (size_t i = 0; i < model.players.size(); ++i) {
    if (model.given_as_relation[i]) {
      Json rows = Json::array();
      for (auto [from, to] : relation_from_info(model.structures[i]).pairs()) {
        rows.push_back(Json::array({space.label(from), space.label(to)}));
      }
      relations[model.players[i]] = std::move(rows);
    } else {
      Json sets = Json::object();
      for (int s = 0; s < space.size(); ++s) {
        sets[space.label(s)] = event_labels(model.structures[i].set(s), space);
      }
      info[model.players[i]] = std::move(sets);
    }
  }
  if (!relations.empty()) doc["relations"] = std::move(relations);
  if (!info.empty()) doc["info"] = std::move(info);

  {
    Json credal = Json::object();
    for (size_t i = 0; i < model.players.size(); ++i) {
      if (model.credal[i]) {
        credal[model.players[i]] = credal_to_json(*model.credal[i]);
      }
    }
    if (!credal.empty()) doc["credal"] = std::move(credal);
  }

  if (model.decision) {
    Json decision = Json::object();
    if (model.decision->is_posterior()) {
      const auto& data = model.decision->posterior_data();
      Json prior = Json::object();
      for (int s = 0; s < space.size(); ++s) {
        prior[space.label(s)] = format_rational(data.prior[s]);
      }
      decision["posterior"] = Json::object();
      decision["posterior"]["prior"] = std::move(prior);
      decision["posterior"]["target"] = event_labels(data.target, space);
    } else {
      const auto& data = model.decision->table_data();
      Json entries = Json::array();
      for (const auto& [event, value] : data.entries) {
        Json row = Json::object();
        row["event"] = event_labels(event, space);
        row["value"] = value.to_string();
        entries.push_back(std::move(row));
      }
      decision["table"] = Json::object();
      decision["table"]["entries"] = std::move(entries);
      if (data.fallback) {
        decision["table"]["default"] = data.fallback->to_string();
      }
    }
    doc["decision"] = std::move(decision);
  }

  if (model.actual) doc["actual"] = space.label(*model.actual);
  return doc.dump(2) + "\n";
}

namespace {

std::string profile_key(const StrategicGame& game, int profile_index) {
  const std::vector<int> actions = game.decode_profile(profile_index);
  std::string key;
  for (int i = 0; i < game.player_count(); ++i) {
    if (i > 0) key += ",";
    key += game.actions(i)[actions[i]];
  }
  return key;
}

}  // namespace

GameFile parse_game(const std::string& text, int max_states) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ValidationError("", "game must be an object");
  require_keys(doc, "", {"players", "actions", "payoffs", "types", "credal"});

  const std::vector<std::string> players =
      string_list(require_field(doc, "", "players"), "players");

  const Json& actions_json = require_field(doc, "", "actions");
  if (!actions_json.is_object()) {
    throw ValidationError("actions", "expected player -> [actions]");
  }
  std::vector<std::vector<std::string>> actions;
  for (const std::string& player : players) {
    if (!actions_json.contains(player)) {
      throw ValidationError("actions", "missing player \"" + player + "\"");
    }
    auto list = string_list(actions_json.at(player), "actions/" + player);
    for (const std::string& action : list) {
      if (action.find(',') != std::string::npos ||
          action.find('|') != std::string::npos) {
        throw ValidationError("actions/" + player,
                              "action labels may not contain ',' or '|'");
      }
    }
    actions.push_back(std::move(list));
  }
  require_keys(actions_json, "actions",
               std::set<std::string>(players.begin(), players.end()));

  // Payoff tables must be total over the full profile space; keys are
  // comma-joined action labels in player order.
  StrategicGame probe(players, actions,
                      [&] {
                        std::vector<std::vector<Rational>> zero(players.size());
                        int count = 1;
                        for (const auto& a : actions)
                          count *= static_cast<int>(a.size());
                        for (auto& table : zero)
                          table.assign(count, Rational(0));
                        return zero;
                      }());
  const Json& payoffs_json = require_field(doc, "", "payoffs");
  if (!payoffs_json.is_object()) {
    throw ValidationError("payoffs", "expected player -> {profile: \"p/q\"}");
  }
  require_keys(payoffs_json, "payoffs",
               std::set<std::string>(players.begin(), players.end()));
  std::vector<std::vector<Rational>> payoffs;
  for (size_t i = 0; i < players.size(); ++i) {
    const std::string path = "payoffs/" + players[i];
    if (!payoffs_json.contains(players[i])) {
      throw ValidationError(path, "missing payoff table");
    }
    const Json& table = payoffs_json.at(players[i]);
    if (!table.is_object()) {
      throw ValidationError(path, "expected {profile: \"p/q\"}");
    }
    std::vector<Rational> row(probe.profile_count(), Rational(0));
    std::vector<bool> seen(probe.profile_count(), false);
    for (const auto& [key, value] : table.items()) {
      bool matched = false;
      for (int p = 0; p < probe.profile_count() && !matched; ++p) {
        if (profile_key(probe, p) == key) {
          row[p] = rational_field(value, path + "/" + key);
          seen[p] = true;
          matched = true;
        }
      }
      if (!matched) {
        throw ValidationError(path, "unknown profile key \"" + key + "\"");
      }
    }
    for (int p = 0; p < probe.profile_count(); ++p) {
      if (!seen[p]) {
        throw ValidationError(path, "payoff table is not total; missing \"" +
                                        profile_key(probe, p) + "\"");
      }
    }
    payoffs.push_back(std::move(row));
  }
  StrategicGame game(players, actions, std::move(payoffs));

  const Json& types_json = require_field(doc, "", "types");
  if (!types_json.is_object()) {
    throw ValidationError("types", "expected player -> [type, ...]");
  }
  require_keys(types_json, "types",
               std::set<std::string>(players.begin(), players.end()));
  std::vector<std::vector<std::vector<Rational>>> types;
  for (size_t i = 0; i < players.size(); ++i) {
    const std::string path = "types/" + players[i];
    if (!types_json.contains(players[i])) {
      throw ValidationError(path, "missing type list");
    }
    const Json& list = types_json.at(players[i]);
    if (!list.is_array() || list.empty()) {
      throw ValidationError(path, "expected a nonempty array of types");
    }
    std::vector<std::vector<Rational>> player_types;
    const int domain = game.opponent_profile_count(static_cast<int>(i));
    for (size_t k = 0; k < list.size(); ++k) {
      const std::string type_path = path + "[" + std::to_string(k) + "]";
      const Json& type = list[k];
      if (!type.is_object()) {
        throw ValidationError(type_path,
                              "expected {opponent profile: \"p/q\"}");
      }
      std::vector<Rational> pmf(domain, Rational(0));
      for (const auto& [key, value] : type.items()) {
        bool matched = false;
        for (int q = 0; q < domain && !matched; ++q) {
          if (game.opponent_profile_label(static_cast<int>(i), q) == key) {
            pmf[q] = rational_field(value, type_path + "/" + key);
            matched = true;
          }
        }
        if (!matched) {
          throw ValidationError(type_path,
                                "unknown opponent profile key \"" + key +
                                    "\"");
        }
      }
      player_types.push_back(std::move(pmf));
    }
    types.push_back(std::move(player_types));
  }

  TypeAssignment assignment(game, std::move(types));
  ExtensionSpace ext(EpistemicExtension{std::move(game),
                                        std::move(assignment)},
                     max_states);

  std::vector<std::optional<CredalSet>> credal(players.size(), std::nullopt);
  if (doc.contains("credal")) {
    const Json& credal_json = doc.at("credal");
    if (!credal_json.is_object()) {
      throw ValidationError("credal", "expected player -> array of measures");
    }
    require_keys(credal_json, "credal",
                 std::set<std::string>(players.begin(), players.end()));
    for (size_t i = 0; i < players.size(); ++i) {
      if (credal_json.contains(players[i])) {
        credal[i] = credal_from_json(credal_json.at(players[i]),
                                     "credal/" + players[i], ext.space());
      }
    }
  }
  return GameFile{std::move(ext), std::move(credal)};
}

std::string serialize_game(const GameFile& file) {
  const StrategicGame& game = file.ext.game();
  Json doc = Json::object();
  doc["players"] = game.players();

  Json actions = Json::object();
  for (int i = 0; i < game.player_count(); ++i) {
    actions[game.player(i)] = game.actions(i);
  }
  doc["actions"] = std::move(actions);

  Json payoffs = Json::object();
  for (int i = 0; i < game.player_count(); ++i) {
    Json table = Json::object();
    for (int p = 0; p < game.profile_count(); ++p) {
      table[profile_key(game, p)] = format_rational(game.payoff(i, p));
    }
    payoffs[game.player(i)] = std::move(table);
  }
  doc["payoffs"] = std::move(payoffs);

  Json types = Json::object();
  for (int i = 0; i < game.player_count(); ++i) {
    Json list = Json::array();
    for (int k = 0; k < file.ext.types().type_count(i); ++k) {
      Json type = Json::object();
      const auto& pmf = file.ext.types().type(i, k);
      for (int q = 0; q < game.opponent_profile_count(i); ++q) {
        type[game.opponent_profile_label(i, q)] = format_rational(pmf[q]);
      }
      list.push_back(std::move(type));
    }
    types[game.player(i)] = std::move(list);
  }
  doc["types"] = std::move(types);

  {
    Json credal = Json::object();
    for (int i = 0; i < game.player_count(); ++i) {
      if (file.credal[i]) {
        credal[game.player(i)] = credal_to_json(*file.credal[i]);
      }
    }
    if (!credal.empty()) doc["credal"] = std::move(credal);
  }
  return doc.dump(2) + "\n";
}

ModelFile extension_to_model(
    const ExtensionSpace& ext,
    const std::vector<std::optional<CredalSet>>& credal) {
  ModelFile model;
  model.space = ext.space();
  model.players = ext.game().players();
  for (int i = 0; i < ext.game().player_count(); ++i) {
    model.structures.push_back(info_from_relation(relation_from_types(ext, i)));
    model.given_as_relation.push_back(true);
  }
  model.credal = credal;
  model.credal.resize(model.players.size());
  return model;
}

}  // namespace doxa
