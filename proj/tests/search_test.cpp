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

#include "doxa/search.hpp"

#include <doctest.h>

namespace doxa {
namespace {

TEST_CASE("relation enumeration counts and cap") {
  RelationEnumerator one(1);
  CHECK(one.total() == 2);
  int count = 0;
  while (one.next()) ++count;
  CHECK(count == 2);

  RelationEnumerator two(2);
  CHECK(two.total() == 16);

  CHECK_THROWS_AS(RelationEnumerator(6), CapExceededError);
}

TEST_CASE("enumeration order is binary counting over the pair matrix") {
  RelationEnumerator relations(2);
  auto first = relations.next();
  REQUIRE(first.has_value());
  CHECK(first->pair_count() == 0);
  auto second = relations.next();
  REQUIRE(second.has_value());
  CHECK(second->pairs() == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("divisible generator: fixed blindspot set reproduces the figure") {
  GeneratorConfig config;
  config.n = 2;
  config.blindspot_set = Event::single(2, 0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    config.seed = seed;
    const InfoStructure out = random_divisible_structure(config);
    // Only one canonical choice exists: both states map to {w2}.
    CHECK(out.set(0) == Event::single(2, 1));
    CHECK(out.set(1) == Event::single(2, 1));
  }
}

TEST_CASE("divisible generator: no blindspots on 2 states gives a partition") {
  GeneratorConfig config;
  config.n = 2;
  config.blindspot_set = Event::none(2);
  bool saw_joint = false;
  bool saw_split = false;
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    config.seed = seed;
    const InfoStructure out = random_divisible_structure(config);
    CHECK(check_structure_properties(out).partitional);
    if (out.set(0) == Event::all(2)) saw_joint = true;
    if (out.set(0) == Event::single(2, 0)) saw_split = true;
  }
  CHECK(saw_joint);
  CHECK(saw_split);
}

TEST_CASE("divisible generator: a single state maps to itself") {
  GeneratorConfig config;
  config.n = 1;
  config.blindspot_set = Event::none(1);
  const InfoStructure out = random_divisible_structure(config);
  CHECK(out.set(0) == Event::single(1, 0));
}

TEST_CASE("divisible generator postconditions across seeds") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GeneratorConfig config;
    config.n = 1 + static_cast<int>(seed % 7);
    config.seed = 0xD1D1 + seed;
    const InfoStructure out = random_divisible_structure(config);
    CHECK(check_structure_properties(out).divisible);
  }
}

TEST_CASE("blindspot set must be a proper subset") {
  GeneratorConfig config;
  config.n = 2;
  config.blindspot_set = Event::all(2);
  CHECK_THROWS_AS(random_divisible_structure(config), ValidationError);
}

TEST_CASE("agreement instances replay exactly from their seed") {
  GeneratorConfig config;
  config.n = 5;
  config.seed = 77;
  const AgreementInstance a = random_agreement_instance(config);
  const AgreementInstance b = random_agreement_instance(config);
  CHECK(a.actual_state == b.actual_state);
  REQUIRE(a.profile.player_count() == b.profile.player_count());
  for (int i = 0; i < a.profile.player_count(); ++i) {
    CHECK(a.profile.structure(i) == b.profile.structure(i));
  }
  CHECK(a.decision.posterior_data().prior ==
        b.decision.posterior_data().prior);
  CHECK(a.decision.posterior_data().target ==
        b.decision.posterior_data().target);
}

TEST_CASE("the built-in mirrored witness matches the hand computation") {
  const AgreementInstance witness = mirrored_counterexample();
  const AgreementResult result = agreement_check(
      witness.profile, witness.decision, witness.actual_state);
  CHECK(result.decisions[0] == DecisionValue::rational(Rational(1)));
  CHECK(result.decisions[1] == DecisionValue::rational(Rational(0)));
  CHECK_FALSE(result.equal_blindspots);
  CHECK(result.common_information);
}

TEST_CASE("counterexample search returns the built-in witness first") {
  CounterexampleConfig config;
  const CounterexampleSearchResult found =
      search_agreement_counterexample(config);
  REQUIRE(found.instance.has_value());
  const AgreementResult result =
      agreement_check(found.instance->profile, found.instance->decision,
                      found.instance->actual_state);
  CHECK_FALSE(result.decisions_equal());
  CHECK_FALSE(result.equal_blindspots);
}

TEST_CASE("counterexample search succeeds from scratch at n <= 3") {
  CounterexampleConfig config;
  config.include_builtin = false;
  config.n = 3;
  const CounterexampleSearchResult found =
      search_agreement_counterexample(config);
  REQUIRE(found.instance.has_value());
  const AgreementResult result =
      agreement_check(found.instance->profile, found.instance->decision,
                      found.instance->actual_state);
  CHECK_FALSE(result.decisions_equal());
  CHECK_FALSE(result.equal_blindspots);
  bool divisible = true;
  for (bool d : result.divisible) divisible = divisible && d;
  CHECK(divisible);
  bool gstp = true;
  for (const auto& g : result.gstp) gstp = gstp && g.passed();
  CHECK(gstp);
  CHECK(result.common_information);
}

TEST_CASE("forcing equal blindspots forbids a counterexample") {
  CounterexampleConfig config;
  config.require_equal_blindspots = true;
  config.n = 2;
  const CounterexampleSearchResult found =
      search_agreement_counterexample(config);
  CHECK_FALSE(found.instance.has_value());
  CHECK(found.candidates_examined > 0);
}

TEST_CASE("extension instances replay exactly from their seed") {
  ExtensionGeneratorConfig config;
  config.seed = 31337;
  const ExtensionInstance a = random_extension_instance(config);
  const ExtensionInstance b = random_extension_instance(config);
  CHECK(a.ext.space()->labels() == b.ext.space()->labels());
  REQUIRE(a.credal.size() == b.credal.size());
  for (size_t i = 0; i < a.credal.size(); ++i) {
    CHECK(a.credal[i].measures() == b.credal[i].measures());
  }
}

TEST_CASE("extension instances satisfy both bridge conditions") {
  for (int i = 0; i < 25; ++i) {
    ExtensionGeneratorConfig config;
    config.seed = 0x5EED + i;
    const ExtensionInstance instance = random_extension_instance(config);
    CHECK_FALSE(check_c1(instance.ext, instance.credal).has_value());
    for (int player = 0; player < instance.ext.game().player_count();
         ++player) {
      const InfoStructure info =
          info_from_relation(relation_from_types(instance.ext, player));
      CHECK_FALSE(check_b1(instance.credal[player], info).has_value());
    }
  }
}

}  // namespace
}  // namespace doxa
