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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "doxa/beliefs.hpp"

namespace doxa {
namespace {

// A random proper subset of the space; resamples the rare all-states draw.
Event random_proper_subset(SplitMix64& rng, int n) {
  while (true) {
    Event b = Event::none(n);
    for (int s = 0; s < n; ++s) {
      if (rng.chance(1, 4)) b.insert(s);
    }
    if (!b.is_universe()) return b;
  }
}

struct CanonicalCells {
  std::vector<Event> cells;
  std::vector<int> cell_of;  // non-blindspot state -> index into cells
};

// A seeded partition of the non-blindspot states.
CanonicalCells random_partition(SplitMix64& rng, int n, const Event& blind) {
  std::vector<int> members = blind.complement().members();
  for (size_t i = members.size(); i > 1; --i) {
    std::swap(members[i - 1], members[rng.below(i)]);
  }
  const int cell_count = rng.range(1, static_cast<int>(members.size()));
  CanonicalCells out;
  out.cells.assign(cell_count, Event::none(n));
  out.cell_of.assign(n, -1);
  for (size_t i = 0; i < members.size(); ++i) {
    const int cell = i < static_cast<size_t>(cell_count)
                         ? static_cast<int>(i)
                         : static_cast<int>(rng.below(cell_count));
    out.cells[cell].insert(members[i]);
    out.cell_of[members[i]] = cell;
  }
  return out;
}

InfoStructure structure_from_cells(const StateSpaceRef& space,
                                   const Event& blind,
                                   const CanonicalCells& cells,
                                   SplitMix64& rng) {
  const int n = space->size();
  std::vector<Event> rows;
  rows.reserve(n);
  for (int s = 0; s < n; ++s) {
    if (blind.contains(s)) {
      rows.push_back(cells.cells[rng.below(cells.cells.size())]);
    } else {
      rows.push_back(cells.cells[cells.cell_of[s]]);
    }
  }
  return InfoStructure(space, std::move(rows));
}

}  // namespace

RelationEnumerator::RelationEnumerator(int n)
    : RelationEnumerator(make_space(n)) {}

RelationEnumerator::RelationEnumerator(StateSpaceRef space)
    : space_(std::move(space)) {
  const int n = space_->size();
  if (n > kEnumerationCap) {
    throw CapExceededError("relation enumeration is capped at " +
                           std::to_string(kEnumerationCap) + " states");
  }
  total_ = std::uint64_t{1} << (n * n);
}

std::optional<Relation> RelationEnumerator::next() {
  if (cursor_ >= total_) return std::nullopt;
  const std::uint64_t mask = cursor_++;
  const int n = space_->size();
  std::vector<Event> rows;
  rows.reserve(n);
  for (int from = 0; from < n; ++from) {
    Event row = Event::none(n);
    for (int to = 0; to < n; ++to) {
      if (mask & (std::uint64_t{1} << (from * n + to))) row.insert(to);
    }
    rows.push_back(std::move(row));
  }
  return Relation(space_, std::move(rows));
}

InfoStructure random_divisible_structure(const GeneratorConfig& config) {
  const int n = config.n;
  StateSpaceRef space = make_space(n);
  SplitMix64 rng(config.seed);

  Event blind = config.blindspot_set.value_or(Event::none(0));
  if (config.blindspot_set) {
    if (blind.width() != n) {
      throw ValidationError("generator", "blindspot set has wrong width");
    }
    if (blind.is_universe()) {
      throw ValidationError("generator",
                            "blindspot set must be a proper subset");
    }
  } else {
    blind = random_proper_subset(rng, n);
  }

  const CanonicalCells cells = random_partition(rng, n, blind);
  InfoStructure out = structure_from_cells(space, blind, cells, rng);

  if (!check_structure_properties(out).divisible || blindspots(out) != blind) {
    throw std::logic_error("divisible generator failed self-validation");
  }
  return out;
}

AgreementInstance random_agreement_instance(const GeneratorConfig& config) {
  const int n = config.n;
  const int players = config.players;
  if (players < 1) throw ValidationError("generator", "players must be >= 1");
  StateSpaceRef space = make_space(n);
  SplitMix64 rng(config.seed);

  std::vector<std::string> ids;
  for (int i = 1; i <= players; ++i) ids.push_back(std::to_string(i));

  for (int attempt = 0; attempt < config.max_retries; ++attempt) {
    Event blind = config.blindspot_set.value_or(Event::none(0));
    if (config.blindspot_set) {
      if (blind.width() != n || blind.is_universe()) {
        throw ValidationError("generator",
                              "blindspot set must be a proper subset");
      }
    } else {
      blind = random_proper_subset(rng, n);
    }

    // One shared partition of the non-blindspot states; the players differ
    // only in where their blindspot states point.
    const CanonicalCells cells = random_partition(rng, n, blind);
    std::vector<InfoStructure> structures;
    structures.reserve(players);
    for (int i = 0; i < players; ++i) {
      structures.push_back(structure_from_cells(space, blind, cells, rng));
    }
    Profile profile(space, ids, std::move(structures));

    std::vector<Rational> prior(n, Rational(0));
    {
      std::vector<int> weights(n, 0);
      long long total = 0;
      for (int s = 0; s < n; ++s) {
        if (!blind.contains(s)) {
          weights[s] = rng.range(1, 9);
          total += weights[s];
        }
      }
      for (int s = 0; s < n; ++s) {
        if (weights[s] > 0) prior[s] = Rational(weights[s], total);
      }
    }
    Event target = rng.event(n);
    DecisionFunction f = DecisionFunction::posterior(prior, target);

    // Try a few random actual states, then the guaranteed one: at any
    // non-blindspot state the group information is that state's shared
    // cell, on which every player's decision is constant.
    std::vector<int> candidates;
    candidates.push_back(static_cast<int>(rng.below(n)));
    candidates.push_back(blind.complement().first());
    for (int actual : candidates) {
      AgreementResult result = agreement_check(profile, f, actual);
      if (result.hypotheses_hold()) {
        return AgreementInstance{std::move(profile), std::move(f), actual};
      }
    }
  }
  throw GenerationExhaustedError(
      "no agreement instance found within the retry budget");
}

AgreementInstance mirrored_counterexample() {
  StateSpaceRef space = make_space(2);
  const Event w1 = Event::single(2, 0);
  const Event w2 = Event::single(2, 1);
  InfoStructure fig({space}, {w2, w2});
  InfoStructure mirror({space}, {w1, w1});
  Profile profile(space, {"1", "2"}, {fig, mirror});
  DecisionFunction f = DecisionFunction::posterior(
      {Rational(1, 2), Rational(1, 2)}, w2);
  return AgreementInstance{std::move(profile), std::move(f), 0};
}

CounterexampleSearchResult search_agreement_counterexample(
    const CounterexampleConfig& config) {
  CounterexampleSearchResult result;

  if (config.include_builtin && !config.require_equal_blindspots) {
    result.candidates_examined = 1;
    result.instance = mirrored_counterexample();
    return result;
  }

  for (int n = 2; n <= config.n; ++n) {
    StateSpaceRef space = make_space(n);

    std::vector<InfoStructure> divisible;
    std::vector<Event> blind_sets;
    RelationEnumerator relations(space);
    while (auto rel = relations.next()) {
      InfoStructure info = info_from_relation(*rel);
      if (check_structure_properties(info).divisible) {
        blind_sets.push_back(blindspots(info));
        divisible.push_back(std::move(info));
      }
    }

    std::vector<Rational> prior(n, Rational(1, n));
    for (size_t a = 0; a < divisible.size(); ++a) {
      for (size_t b = 0; b < divisible.size(); ++b) {
        const bool equal_blind = blind_sets[a] == blind_sets[b];
        if (equal_blind != config.require_equal_blindspots) continue;
        Profile profile(space, {"1", "2"}, {divisible[a], divisible[b]});
        for (std::uint64_t target_mask = 0;
             target_mask < (std::uint64_t{1} << n); ++target_mask) {
          DecisionFunction f = DecisionFunction::posterior(
              prior, Event::from_mask(n, target_mask));
          for (int actual = 0; actual < n; ++actual) {
            if (result.candidates_examined++ >= config.budget) return result;
            AgreementResult check = agreement_check(profile, f, actual);
            bool divisible_ok = true;
            for (bool d : check.divisible) divisible_ok = divisible_ok && d;
            bool gstp_ok = true;
            for (const auto& g : check.gstp) gstp_ok = gstp_ok && g.passed();
            if (divisible_ok && gstp_ok && check.common_information &&
                !check.decisions_equal()) {
              result.instance =
                  AgreementInstance{std::move(profile), std::move(f), actual};
              return result;
            }
          }
        }
      }
    }
  }
  return result;
}

ExtensionInstance random_extension_instance(
    const ExtensionGeneratorConfig& config) {
  SplitMix64 rng(config.seed);
  const int players = config.players;
  if (players < 2) throw ValidationError("generator", "players must be >= 2");

  for (int attempt = 0; attempt < config.max_retries; ++attempt) {
    // Draw dimensions until the product space fits the cap.
    std::vector<int> action_counts(players);
    std::vector<int> type_counts(players);
    long long total = 1;
    for (int i = 0; i < players; ++i) {
      action_counts[i] = rng.range(1, config.max_actions);
      type_counts[i] = rng.range(1, config.max_types);
      total *= action_counts[i];
      total *= type_counts[i];
    }
    if (total > config.max_states) continue;

    std::vector<std::string> ids;
    std::vector<std::vector<std::string>> actions(players);
    for (int i = 0; i < players; ++i) {
      ids.push_back(std::to_string(i + 1));
      for (int a = 0; a < action_counts[i]; ++a) {
        actions[i].push_back("a" + std::to_string(i + 1) +
                             std::to_string(a + 1));
      }
    }

    int profile_count = 1;
    for (int i = 0; i < players; ++i) profile_count *= action_counts[i];
    std::vector<std::vector<Rational>> payoffs(players);
    for (int i = 0; i < players; ++i) {
      for (int p = 0; p < profile_count; ++p) {
        payoffs[i].push_back(Rational(rng.range(-3, 3)));
      }
    }
    StrategicGame game(ids, actions, payoffs);

    // Types of one player share a support; this is the regime in which the
    // bridge conditions are jointly satisfiable.
    std::vector<std::vector<std::vector<Rational>>> types(players);
    std::vector<std::vector<int>> supports(players);
    bool ok = true;
    for (int i = 0; i < players && ok; ++i) {
      const int domain = game.opponent_profile_count(i);
      for (int q = 0; q < domain; ++q) {
        if (rng.chance(1, 2)) supports[i].push_back(q);
      }
      if (supports[i].empty()) {
        supports[i].push_back(static_cast<int>(rng.below(domain)));
      }

      const int want = supports[i].size() == 1 ? 1 : type_counts[i];
      for (int k = 0; k < want; ++k) {
        std::vector<Rational> pmf(domain, Rational(0));
        std::vector<int> weights(supports[i].size());
        long long weight_total = 0;
        for (size_t j = 0; j < supports[i].size(); ++j) {
          weights[j] = rng.range(1, 6);
          weight_total += weights[j];
        }
        for (size_t j = 0; j < supports[i].size(); ++j) {
          pmf[supports[i][j]] = Rational(weights[j], weight_total);
        }
        if (std::find(types[i].begin(), types[i].end(), pmf) ==
            types[i].end()) {
          types[i].push_back(std::move(pmf));
        }
      }
      ok = !types[i].empty();
    }
    if (!ok) continue;

    ExtensionSpace ext(
        EpistemicExtension{game, TypeAssignment(game, std::move(types))},
        config.max_states);
    const int n = ext.space()->size();

    std::vector<CredalSet> credal;
    credal.reserve(players);
    for (int i = 0; i < players; ++i) {
      Event accessible = Event::none(n);
      std::vector<Event> profile_events;
      for (int q : supports[i]) {
        Event e = event_of_opponent_profile(ext, i, q);
        accessible |= e;
        profile_events.push_back(std::move(e));
      }

      std::vector<std::vector<Rational>> measures;
      for (int k = 0; k < ext.types().type_count(i); ++k) {
        const auto& pmf = ext.types().type(i, k);
        for (size_t j = 0; j < supports[i].size(); ++j) {
          const int q = supports[i][j];
          const Event& on = profile_events[j];
          const Event rest = accessible - on;
          const Rational remainder = Rational(1) - pmf[q];
          if (remainder > 0 && rest.empty()) {
            throw std::logic_error("extension generator: no room for mass");
          }
          std::vector<Rational> measure(n, Rational(0));
          for (int s = on.first(); s >= 0; s = on.next(s)) {
            measure[s] = pmf[q] / on.count();
          }
          if (remainder > 0) {
            for (int s = rest.first(); s >= 0; s = rest.next(s)) {
              measure[s] = remainder / rest.count();
            }
          }
          measures.push_back(std::move(measure));
        }
      }
      // Covering measure: keeps every accessible state positively possible.
      std::vector<Rational> covering(n, Rational(0));
      for (int s = accessible.first(); s >= 0; s = accessible.next(s)) {
        covering[s] = Rational(1, accessible.count());
      }
      measures.push_back(std::move(covering));
      credal.emplace_back(ext.space(), std::move(measures));
    }

    // Emit only after the independent checkers agree.
    for (int i = 0; i < players; ++i) {
      InfoStructure info = info_from_relation(relation_from_types(ext, i));
      if (check_b1(credal[i], info)) {
        throw std::logic_error("extension generator failed B1 validation");
      }
    }
    if (check_c1(ext, credal)) {
      throw std::logic_error("extension generator failed C1 validation");
    }
    return ExtensionInstance{std::move(ext), std::move(credal)};
  }
  throw GenerationExhaustedError(
      "no extension instance found within the retry budget");
}

}  // namespace doxa
