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

#include <doctest.h>

#include "doxa/search.hpp"

namespace doxa {
namespace {

StrategicGame coordination_game() {
  // U/D vs L/R; payoff 1 on matching corners, 0 elsewhere.
  return StrategicGame(
      {"1", "2"}, {{"U", "D"}, {"L", "R"}},
      {{Rational(1), Rational(0), Rational(0), Rational(1)},
       {Rational(1), Rational(0), Rational(0), Rational(1)}});
}

// Player 1 is certain of L; player 2 is split between U and D.
ExtensionSpace four_state_extension() {
  StrategicGame game = coordination_game();
  TypeAssignment types(game, {{{Rational(1), Rational(0)}},
                              {{Rational(1, 2), Rational(1, 2)}}});
  return build_state_space(EpistemicExtension{std::move(game),
                                              std::move(types)});
}

std::vector<CredalSet> four_state_credal(const ExtensionSpace& ext) {
  // Player 1: uniform over the two L-states; player 2: uniform over all.
  std::vector<std::vector<Rational>> p1 = {
      {Rational(1, 2), Rational(0), Rational(1, 2), Rational(0)}};
  std::vector<std::vector<Rational>> p2 = {
      {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}};
  return {CredalSet(ext.space(), std::move(p1)),
          CredalSet(ext.space(), std::move(p2))};
}

TEST_CASE("game profile indexing and payoffs") {
  const StrategicGame game = coordination_game();
  CHECK(game.profile_count() == 4);
  CHECK(game.payoff(0, {0, 0}) == Rational(1));
  CHECK(game.payoff(0, {0, 1}) == Rational(0));
  CHECK(game.payoff(1, {1, 1}) == Rational(1));
  CHECK(game.opponent_profile_count(0) == 2);
  CHECK(game.opponent_profile_label(0, 0) == "L");
  CHECK(game.opponent_profile_label(1, 1) == "D");
}

TEST_CASE("type assignments validate normalization and distinctness") {
  StrategicGame game = coordination_game();
  CHECK_THROWS_AS(
      TypeAssignment(game, {{{Rational(1, 2), Rational(1, 3)}},
                            {{Rational(1), Rational(0)}}}),
      ValidationError);
  CHECK_THROWS_AS(
      TypeAssignment(game, {{{Rational(1), Rational(0)},
                             {Rational(1), Rational(0)}},
                            {{Rational(1), Rational(0)}}}),
      ValidationError);
}

TEST_CASE("the induced state space enumerates the full product in order") {
  const ExtensionSpace ext = four_state_extension();
  CHECK(ext.space()->size() == 4);
  CHECK(ext.space()->labels() ==
        std::vector<std::string>{"U,L|0,0", "U,R|0,0", "D,L|0,0", "D,R|0,0"});

  // Singleton everything: one state.
  StrategicGame tiny({"1", "2"}, {{"x"}, {"y"}},
                     {{Rational(0)}, {Rational(0)}});
  TypeAssignment tiny_types(tiny, {{{Rational(1)}}, {{Rational(1)}}});
  CHECK(build_state_space(EpistemicExtension{tiny, tiny_types})
            .space()
            ->size() == 1);

  // Two types for player 2 double the space, type coordinate minor.
  StrategicGame game = coordination_game();
  TypeAssignment two_types(
      game, {{{Rational(1), Rational(0)}},
             {{Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)}}});
  const ExtensionSpace bigger =
      build_state_space(EpistemicExtension{game, two_types});
  CHECK(bigger.space()->size() == 8);
  CHECK(bigger.space()->label(0) == "U,L|0,0");
  CHECK(bigger.space()->label(1) == "U,L|0,1");
  CHECK(bigger.space()->label(2) == "U,R|0,0");
}

TEST_CASE("the size cap is enforced") {
  StrategicGame game = coordination_game();
  TypeAssignment types(game, {{{Rational(1), Rational(0)}},
                              {{Rational(1, 2), Rational(1, 2)}}});
  CHECK_THROWS_AS(
      build_state_space(EpistemicExtension{game, types}, /*max_states=*/3),
      SizeLimitError);
}

TEST_CASE("opponent-profile events pick out coordinate matches") {
  const ExtensionSpace ext = four_state_extension();
  // Player 1's opponent profiles are A^2 = [L, R].
  CHECK(event_of_opponent_profile(ext, 0, 0) == Event::of(4, {0, 2}));
  CHECK(event_of_opponent_profile(ext, 0, 1) == Event::of(4, {1, 3}));
  // Player 2's opponent profiles are A^1 = [U, D].
  CHECK(event_of_opponent_profile(ext, 1, 0) == Event::of(4, {0, 1}));
  CHECK_THROWS_AS(event_of_opponent_profile(ext, 0, 5), ValidationError);

  // A single opponent profile covers the whole space.
  StrategicGame narrow({"1", "2"}, {{"U", "D"}, {"L"}},
                       {{Rational(0), Rational(0)},
                        {Rational(0), Rational(0)}});
  TypeAssignment narrow_types(
      narrow, {{{Rational(1)}}, {{Rational(1, 2), Rational(1, 2)}}});
  const ExtensionSpace narrow_ext =
      build_state_space(EpistemicExtension{narrow, narrow_types});
  CHECK(event_of_opponent_profile(narrow_ext, 0, 0) ==
        Event::all(narrow_ext.space()->size()));
}

TEST_CASE("event_of_type picks out the type coordinate") {
  const ExtensionSpace ext = four_state_extension();
  CHECK(event_of_type(ext, 0, 0) == Event::all(4));
  CHECK_THROWS_AS(event_of_type(ext, 0, 1), ValidationError);
}

TEST_CASE("type-induced relations and blindspots of the 4-state example") {
  const ExtensionSpace ext = four_state_extension();

  const Relation r1 = relation_from_types(ext, 0);
  const Event l_states = Event::of(4, {0, 2});
  for (int s = 0; s < 4; ++s) CHECK(r1.successors(s) == l_states);
  CHECK(blindspots(info_from_relation(r1)) == Event::of(4, {1, 3}));

  const Relation r2 = relation_from_types(ext, 1);
  for (int s = 0; s < 4; ++s) CHECK(r2.successors(s) == Event::all(4));
  CHECK(blindspots(info_from_relation(r2)).empty());

  // Seriality needs only that types are pmfs.
  CHECK(check_relation_properties(r1).serial);
  CHECK(check_relation_properties(r2).serial);
}

TEST_CASE("accessibility degrees grade the relation") {
  const ExtensionSpace ext = four_state_extension();
  CHECK(accessibility_degree(ext, 0, 0, 0) == Rational(1));  // an L-state
  CHECK(accessibility_degree(ext, 0, 0, 1) == Rational(0));  // an R-state
  CHECK(accessibility_degree(ext, 1, 2, 0) == Rational(1, 2));

  const Relation r1 = relation_from_types(ext, 0);
  for (int from = 0; from < 4; ++from) {
    for (int to = 0; to < 4; ++to) {
      CHECK((accessibility_degree(ext, 0, from, to) > 0) ==
            r1.contains(from, to));
    }
  }
}

TEST_CASE("C1 on the 4-state example") {
  const ExtensionSpace ext = four_state_extension();
  const std::vector<CredalSet> credal = four_state_credal(ext);
  CHECK_FALSE(check_c1(ext, credal).has_value());

  // A uniform global measure cannot match player 1's certainty of L.
  const std::vector<CredalSet> wrong = {
      CredalSet(ext.space(), {{Rational(1, 4), Rational(1, 4), Rational(1, 4),
                               Rational(1, 4)}}),
      credal[1]};
  const auto violation = check_c1(ext, wrong);
  REQUIRE(violation.has_value());
  CHECK(violation->player == 0);
  CHECK(violation->type_index == 0);
  CHECK(violation->opponent_profile == 0);  // the L column

  // With a single opponent profile, C1 reduces to normalization.
  StrategicGame narrow({"1", "2"}, {{"U", "D"}, {"L"}},
                       {{Rational(0), Rational(0)},
                        {Rational(0), Rational(0)}});
  TypeAssignment narrow_types(
      narrow, {{{Rational(1)}}, {{Rational(1, 2), Rational(1, 2)}}});
  const ExtensionSpace narrow_ext =
      build_state_space(EpistemicExtension{narrow, narrow_types});
  const int n = narrow_ext.space()->size();
  std::vector<Rational> uniform(n, Rational(1, n));
  CHECK_FALSE(check_c1_player(narrow_ext, 0,
                              CredalSet(narrow_ext.space(), {uniform}))
                  .has_value());
}

TEST_CASE("strict C1 mode: per-pair matches can fail the per-type reading") {
  // One column player facing three actions. Three measures each match
  // exactly one coordinate of the type (1/2, 1/4, 1/4), so the literal
  // per-(type, profile) existential passes while no single measure works.
  StrategicGame game({"1", "2"}, {{"U"}, {"L", "M", "R"}},
                     {{Rational(0), Rational(0), Rational(0)},
                      {Rational(0), Rational(0), Rational(0)}});
  TypeAssignment types(
      game, {{{Rational(1, 2), Rational(1, 4), Rational(1, 4)}},
             {{Rational(1)}}});
  const ExtensionSpace ext =
      build_state_space(EpistemicExtension{std::move(game), std::move(types)});
  REQUIRE(ext.space()->size() == 3);

  const CredalSet credal(
      ext.space(),
      {{Rational(1, 2), Rational(3, 8), Rational(1, 8)},
       {Rational(1, 4), Rational(1, 4), Rational(1, 2)},
       {Rational(3, 8), Rational(3, 8), Rational(1, 4)}});
  CHECK_FALSE(check_c1_player(ext, 0, credal).has_value());

  C1Options strict;
  strict.one_measure_per_type = true;
  const auto violation = check_c1_player(ext, 0, credal, strict);
  REQUIRE(violation.has_value());
  CHECK(violation->player == 0);
  CHECK(violation->type_index == 0);
  CHECK(violation->opponent_profile == -1);
}

TEST_CASE("degrees depend only on the source type and target opponent actions") {
  for (int i = 0; i < 10; ++i) {
    ExtensionGeneratorConfig config;
    config.seed = 0xD06E + i;
    const ExtensionInstance instance = random_extension_instance(config);
    const ExtensionSpace& ext = instance.ext;
    const int n = ext.space()->size();
    for (int player = 0; player < ext.game().player_count(); ++player) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          for (int c = 0; c < n; ++c) {
            if (ext.type_of(a, player) == ext.type_of(b, player)) {
              CHECK(accessibility_degree(ext, player, a, c) ==
                    accessibility_degree(ext, player, b, c));
            }
            if (ext.opponent_profile_of(b, player) ==
                ext.opponent_profile_of(c, player)) {
              CHECK(accessibility_degree(ext, player, a, b) ==
                    accessibility_degree(ext, player, a, c));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("the extension theorem holds on the 4-state example") {
  const ExtensionSpace ext = four_state_extension();
  const std::vector<CredalSet> credal = four_state_credal(ext);
  const TheoremReport report = verify_extension_theorem(
      ext, {credal[0], credal[1]});
  CHECK(report.all_applicable_and_passed());
}

TEST_CASE("a broken credal set fails B1 and suspends the conclusions") {
  const ExtensionSpace ext = four_state_extension();
  // Uniform over everything although player 1 has blindspots.
  const CredalSet uniform(ext.space(), {{Rational(1, 4), Rational(1, 4),
                                         Rational(1, 4), Rational(1, 4)}});
  const std::vector<CredalSet> good = four_state_credal(ext);
  const TheoremReport report =
      verify_extension_theorem(ext, {uniform, good[1]});
  bool b1_failed = false;
  bool transitive_skipped = false;
  bool serial_checked = false;
  for (const auto& check : report.checks()) {
    if (check.name == "hypothesis-B1(player 1)") {
      b1_failed = check.applicable && !check.passed;
    }
    if (check.name == "transitive(player 1)") {
      transitive_skipped = !check.applicable;
    }
    if (check.name == "serial(player 1)") {
      serial_checked = check.applicable && check.passed;
    }
  }
  CHECK(b1_failed);
  CHECK(transitive_skipped);
  CHECK(serial_checked);
}

TEST_CASE("generated extensions satisfy the theorem end to end") {
  for (int i = 0; i < 50; ++i) {
    ExtensionGeneratorConfig config;
    config.seed = 0xBEEF + i;
    config.players = 2 + (i % 2);
    const ExtensionInstance instance = random_extension_instance(config);
    std::vector<std::optional<CredalSet>> credal;
    for (const CredalSet& set : instance.credal) credal.push_back(set);
    const TheoremReport report =
        verify_extension_theorem(instance.ext, credal);
    if (!report.all_applicable_and_passed()) {
      for (const auto& check : report.checks()) {
        if (!check.applicable || !check.passed) {
          FAIL("seed ", config.seed, ": ", check.name, " — ", check.detail);
        }
      }
    }
  }
}

TEST_CASE("blindspot characterization: zero columns across all types") {
  for (int i = 0; i < 30; ++i) {
    ExtensionGeneratorConfig config;
    config.seed = 0xFACE + i;
    const ExtensionInstance instance = random_extension_instance(config);
    const ExtensionSpace& ext = instance.ext;
    for (int player = 0; player < ext.game().player_count(); ++player) {
      const Event blind =
          blindspots(info_from_relation(relation_from_types(ext, player)));
      for (int state = 0; state < ext.space()->size(); ++state) {
        bool all_zero = true;
        const int q = ext.opponent_profile_of(state, player);
        for (int k = 0; k < ext.types().type_count(player); ++k) {
          all_zero = all_zero && ext.types().type(player, k)[q] == 0;
        }
        CHECK(blind.contains(state) == all_zero);
      }
    }
  }
}

}  // namespace
}  // namespace doxa
