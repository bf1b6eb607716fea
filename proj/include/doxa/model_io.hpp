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
#include <vector>

#include "doxa/beliefs.hpp"
#include "doxa/decisions.hpp"
#include "doxa/frames.hpp"
#include "doxa/games.hpp"
#include "doxa/group.hpp"
#include "doxa/state_space.hpp"

namespace doxa {

/// A parsed multi-player model document. Structures are stored uniformly
/// as information structures; `given_as_relation` remembers each player's
/// input presentation so that serialization and `convert` are faithful.
struct ModelFile {
  StateSpaceRef space;
  std::vector<std::string> players;
  std::vector<InfoStructure> structures;
  std::vector<bool> given_as_relation;
  std::vector<std::optional<CredalSet>> credal;
  std::optional<DecisionFunction> decision;
  std::optional<int> actual;

  Profile profile() const { return Profile(space, players, structures); }
};

/// Parses and structurally validates a model document. All referenced
/// labels must resolve; probabilities are exact "p/q" strings.
/// Throws ParseError on malformed JSON, ValidationError on constraint
/// violations.
ModelFile parse_model(const std::string& text);

/// Canonical, byte-stable serialization (normalizing a parsed document
/// once is idempotent).
std::string serialize_model(const ModelFile& model);

/// A parsed strategic game with types (and optional credal sets over the
/// induced extension space).
struct GameFile {
  ExtensionSpace ext;
  std::vector<std::optional<CredalSet>> credal;
};

GameFile parse_game(const std::string& text,
                    int max_states = kDefaultMaxStates);
std::string serialize_game(const GameFile& game);

/// The induced extension as a model document: the product state space, one
/// relation per player from the type bridge, credal sets passed through.
ModelFile extension_to_model(const ExtensionSpace& ext,
                             const std::vector<std::optional<CredalSet>>& credal);

}  // namespace doxa
