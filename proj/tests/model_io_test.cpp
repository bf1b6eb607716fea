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

#include <doctest.h>

#include "doxa/dot.hpp"

namespace doxa {
namespace {

const char* kFigureModel = R"({
  "states": ["w1", "w2"],
  "players": ["1"],
  "relations": {"1": [["w1", "w2"], ["w2", "w2"]]}
})";

const char* kMirroredModel = R"({
  "states": ["w1", "w2"],
  "players": ["1", "2"],
  "relations": {
    "1": [["w1", "w2"], ["w2", "w2"]],
    "2": [["w1", "w1"], ["w2", "w1"]]
  },
  "decision": {
    "posterior": {
      "prior": {"w1": "1/2", "w2": "1/2"},
      "target": ["w2"]
    }
  },
  "actual": "w1"
})";

TEST_CASE("the figure model parses into the expected structure") {
  const ModelFile model = parse_model(kFigureModel);
  CHECK(model.players == std::vector<std::string>{"1"});
  CHECK(model.structures[0].set(0) == Event::single(2, 1));
  CHECK(model.structures[0].set(1) == Event::single(2, 1));
  CHECK(model.given_as_relation[0]);
  CHECK(blindspots(model.structures[0]) == Event::single(2, 0));
}

TEST_CASE("info-map models must be total and resolve labels") {
  CHECK_THROWS_AS(parse_model(R"({
    "states": ["w1", "w2"],
    "players": ["1"],
    "info": {"1": {"w1": ["w2"]}}
  })"),
                  ValidationError);
  CHECK_THROWS_AS(parse_model(R"({
    "states": ["w1", "w2"],
    "players": ["1"],
    "relations": {"1": [["w1", "bogus"]]}
  })"),
                  ValidationError);
}

TEST_CASE("a measure that sums to 9/10 is rejected") {
  CHECK_THROWS_AS(parse_model(R"({
    "states": ["w1", "w2"],
    "players": ["1"],
    "relations": {"1": [["w1", "w2"]]},
    "credal": {"1": [{"w1": "1/2", "w2": "2/5"}]}
  })"),
                  ValidationError);
}

TEST_CASE("each player needs exactly one presentation") {
  CHECK_THROWS_AS(parse_model(R"({
    "states": ["w1"],
    "players": ["1"],
    "relations": {"1": []},
    "info": {"1": {"w1": []}}
  })"),
                  ValidationError);
  CHECK_THROWS_AS(parse_model(R"({
    "states": ["w1"],
    "players": ["1"]
  })"),
                  ValidationError);
}

TEST_CASE("malformed JSON raises ParseError") {
  CHECK_THROWS_AS(parse_model("{ not json"), ParseError);
}

TEST_CASE("serialization is byte-stable after one normalization") {
  const ModelFile parsed = parse_model(kMirroredModel);
  const std::string once = serialize_model(parsed);
  const std::string twice = serialize_model(parse_model(once));
  CHECK(once == twice);

  const ModelFile reparsed = parse_model(once);
  REQUIRE(reparsed.structures.size() == parsed.structures.size());
  for (size_t i = 0; i < parsed.structures.size(); ++i) {
    CHECK(parsed.structures[i] == reparsed.structures[i]);
  }
  CHECK(parsed.actual == reparsed.actual);
}

const char* kFourStateGame = R"({
  "players": ["1", "2"],
  "actions": {"1": ["U", "D"], "2": ["L", "R"]},
  "payoffs": {
    "1": {"U,L": "1", "U,R": "0", "D,L": "0", "D,R": "1"},
    "2": {"U,L": "1", "U,R": "0", "D,L": "0", "D,R": "1"}
  },
  "types": {
    "1": [{"L": "1"}],
    "2": [{"U": "1/2", "D": "1/2"}]
  },
  "credal": {
    "1": [{"U,L|0,0": "1/2", "D,L|0,0": "1/2"}],
    "2": [{"U,L|0,0": "1/4", "U,R|0,0": "1/4", "D,L|0,0": "1/4", "D,R|0,0": "1/4"}]
  }
})";

TEST_CASE("game files parse, induce the product space, and round trip") {
  const GameFile game = parse_game(kFourStateGame);
  CHECK(game.ext.space()->size() == 4);
  CHECK(game.ext.space()->label(0) == "U,L|0,0");
  CHECK(game.ext.game().payoff(0, {0, 0}) == Rational(1));
  REQUIRE(game.credal[0].has_value());
  CHECK(game.credal[0]->measure_count() == 1);

  const std::string once = serialize_game(game);
  const std::string twice = serialize_game(parse_game(once));
  CHECK(once == twice);
}

TEST_CASE("game validation: totality and type normalization") {
  CHECK_THROWS_AS(parse_game(R"({
    "players": ["1", "2"],
    "actions": {"1": ["U", "D"], "2": ["L"]},
    "payoffs": {
      "1": {"U,L": "1"},
      "2": {"U,L": "0", "D,L": "0"}
    },
    "types": {"1": [{"L": "1"}], "2": [{"U": "1", "D": "0"}]}
  })"),
                  ValidationError);
  CHECK_THROWS_AS(parse_game(R"({
    "players": ["1", "2"],
    "actions": {"1": ["U"], "2": ["L"]},
    "payoffs": {"1": {"U,L": "1"}, "2": {"U,L": "0"}},
    "types": {"1": [{"L": "9/10"}], "2": [{"U": "1"}]}
  })"),
                  ValidationError);
}

TEST_CASE("the induced extension serializes as a model file") {
  const GameFile game = parse_game(kFourStateGame);
  std::vector<std::optional<CredalSet>> credal(game.credal.begin(),
                                               game.credal.end());
  const ModelFile model = extension_to_model(game.ext, credal);
  CHECK(model.space->size() == 4);
  CHECK(model.players == std::vector<std::string>{"1", "2"});
  // Player 1 reaches exactly the L-states from everywhere.
  CHECK(model.structures[0].set(0) == Event::of(4, {0, 2}));
  const std::string text = serialize_model(model);
  const ModelFile reparsed = parse_model(text);
  CHECK(reparsed.structures[0] == model.structures[0]);
}

TEST_CASE("DOT export of the figure marks the blindspot and both edges") {
  const ModelFile model = parse_model(kFigureModel);
  const std::string dot = export_dot(model);
  CHECK(dot.find("digraph \"player_1\"") != std::string::npos);
  CHECK(dot.find("\"w1\" [style=dashed];") != std::string::npos);
  CHECK(dot.find("\"w1\" -> \"w2\";") != std::string::npos);
  CHECK(dot.find("\"w2\" -> \"w2\";") != std::string::npos);
  CHECK(export_dot(model) == dot);  // byte-deterministic
}

TEST_CASE("DOT export of the identity model has self-loops and no marks") {
  auto space = make_space(3);
  ModelFile model;
  model.space = space;
  model.players = {"1"};
  model.structures = {info_from_relation(Relation::identity(space))};
  model.given_as_relation = {true};
  model.credal.resize(1);
  const std::string dot = export_dot(model);
  CHECK(dot.find("style=dashed") == std::string::npos);
  CHECK(dot.find("\"w1\" -> \"w1\";") != std::string::npos);
  CHECK(dot.find("\"w2\" -> \"w2\";") != std::string::npos);
  CHECK(dot.find("\"w3\" -> \"w3\";") != std::string::npos);
}

TEST_CASE("merged DOT export labels the mirrored model's four edges") {
  const ModelFile model = parse_model(kMirroredModel);
  DotOptions options;
  options.merged = true;
  const std::string dot = export_dot(model, options);
  CHECK(dot.find("\"w1\" -> \"w2\" [label=\"1\"];") != std::string::npos);
  CHECK(dot.find("\"w2\" -> \"w2\" [label=\"1\"];") != std::string::npos);
  CHECK(dot.find("\"w1\" -> \"w1\" [label=\"2\"];") != std::string::npos);
  CHECK(dot.find("\"w2\" -> \"w1\" [label=\"2\"];") != std::string::npos);
}

TEST_CASE("DOT export of a game can label degrees") {
  const GameFile game = parse_game(kFourStateGame);
  DotOptions options;
  options.degrees = true;
  options.player = "2";
  const std::string dot = export_dot(game.ext, options);
  CHECK(dot.find("[label=\"1/2\"]") != std::string::npos);
}

}  // namespace
}  // namespace doxa
