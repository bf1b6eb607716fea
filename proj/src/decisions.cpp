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

#include "doxa/decisions.hpp"

#include <algorithm>

#include "doxa/rng.hpp"

namespace doxa {

std::string DecisionValue::to_string() const {
  if (is_rational()) return format_rational(rational_value());
  return label_value();
}

DecisionFunction DecisionFunction::table(
    std::map<Event, DecisionValue> entries,
    std::optional<DecisionValue> fallback) {
  int width = -1;
  for (const auto& [event, value] : entries) {
    (void)value;
    if (width < 0) width = event.width();
    if (event.width() != width) {
      throw ValidationError("decision", "table events over different spaces");
    }
  }
  return DecisionFunction(Table{std::move(entries), std::move(fallback)});
}

DecisionFunction DecisionFunction::posterior(std::vector<Rational> prior,
                                             Event target) {
  if (static_cast<int>(prior.size()) != target.width()) {
    throw ValidationError("decision", "prior and target state counts differ");
  }
  Rational total = 0;
  for (const Rational& p : prior) {
    if (p < 0) throw ValidationError("decision", "negative prior probability");
    total += p;
  }
  if (total != 1) {
    throw ValidationError("decision", "prior must sum to exactly 1, got " +
                                          format_rational(total));
  }
  return DecisionFunction(Posterior{std::move(prior), std::move(target)});
}

DecisionValue DecisionFunction::evaluate(const Event& e) const {
  if (const Table* t = std::get_if<Table>(&fn_)) {
    auto it = t->entries.find(e);
    if (it != t->entries.end()) return it->second;
    if (t->fallback) return *t->fallback;
    throw UndefinedDecisionError(e);
  }
  const Posterior& p = std::get<Posterior>(fn_);
  if (e.width() != static_cast<int>(p.prior.size())) {
    throw ValidationError("decision", "event is over a different space");
  }
  Rational conditioning = 0;
  Rational joint = 0;
  for (int s = e.first(); s >= 0; s = e.next(s)) {
    conditioning += p.prior[s];
    if (p.target.contains(s)) joint += p.prior[s];
  }
  if (conditioning == 0) throw ZeroProbabilityConditioningError(e);
  return DecisionValue::rational(joint / conditioning);
}

DecisionValue evaluate(const DecisionFunction& f, const Event& e) {
  return f.evaluate(e);
}

namespace {

// Values of f at every singleton's information set, computed once. An
// evaluation failure is rethrown carrying the offending subset {v}.
std::vector<DecisionValue> per_state_values(const DecisionFunction& f,
                                            const InfoStructure& info) {
  std::vector<DecisionValue> values;
  values.reserve(info.size());
  for (int s = 0; s < info.size(); ++s) {
    try {
      values.push_back(f.evaluate(info.set(s)));
    } catch (const UndefinedDecisionError&) {
      throw UndefinedDecisionError(Event::single(info.size(), s));
    } catch (const ZeroProbabilityConditioningError&) {
      throw ZeroProbabilityConditioningError(Event::single(info.size(), s));
    }
  }
  return values;
}

// Tests one subset S: if f(I(v)) is the constant d on S, f of the union of
// those information sets must be d. Returns a counterexample or nullopt.
std::optional<GstpCounterexample> test_subset(
    const DecisionFunction& f, const InfoStructure& info,
    const std::vector<DecisionValue>& values, const Event& subset) {
  int first = subset.first();
  if (first < 0) return std::nullopt;
  const DecisionValue& d = values[first];
  Event pooled = info.set(first);
  for (int s = subset.next(first); s >= 0; s = subset.next(s)) {
    if (!(values[s] == d)) return std::nullopt;  // hypothesis fails; vacuous
    pooled |= info.set(s);
  }
  try {
    if (f.evaluate(pooled) == d) return std::nullopt;
  } catch (const UndefinedDecisionError&) {
    throw UndefinedDecisionError(subset);
  } catch (const ZeroProbabilityConditioningError&) {
    throw ZeroProbabilityConditioningError(subset);
  }
  return GstpCounterexample{subset, d};
}

}  // namespace

GstpResult satisfies_gstp(const DecisionFunction& f, const InfoStructure& info,
                          const GstpOptions& options) {
  const int n = info.size();
  GstpResult result;
  const std::vector<DecisionValue> values = per_state_values(f, info);

  if (n <= options.exhaustive_limit) {
    result.mode = ScanMode::kExhaustive;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      Event subset = Event::from_mask(n, mask);
      if (auto cex = test_subset(f, info, values, subset)) {
        result.counterexample = std::move(cex);
        return result;
      }
    }
    return result;
  }

  result.mode = ScanMode::kSampled;

  // Distinct information cells in first-occurrence order.
  std::vector<Event> cells;
  for (int s = 0; s < n; ++s) {
    if (std::find(cells.begin(), cells.end(), info.set(s)) == cells.end()) {
      cells.push_back(info.set(s));
    }
  }
  // All unions of distinct cells, read back as state subsets
  // S = { v | I(v) is one of the chosen cells }, capped to keep 2^m sane.
  const int m = static_cast<int>(cells.size());
  if (m <= 16) {
    for (std::uint64_t choice = 1; choice < (std::uint64_t{1} << m); ++choice) {
      Event subset = Event::none(n);
      for (int c = 0; c < m; ++c) {
        if (!(choice & (std::uint64_t{1} << c))) continue;
        for (int s = 0; s < n; ++s) {
          if (info.set(s) == cells[c]) subset.insert(s);
        }
      }
      if (auto cex = test_subset(f, info, values, subset)) {
        result.counterexample = std::move(cex);
        return result;
      }
    }
  }

  SplitMix64 rng(options.seed ^ static_cast<std::uint64_t>(n));
  for (int i = 0; i < options.min_samples; ++i) {
    Event subset = rng.event(n);
    if (m > 16) {
      // Also fold in a random cell union when full enumeration was skipped.
      Event cell_union = Event::none(n);
      for (int c = 0; c < m; ++c) {
        if (rng.chance(1, 2)) {
          for (int s = 0; s < n; ++s) {
            if (info.set(s) == cells[c]) cell_union.insert(s);
          }
        }
      }
      if (auto cex = test_subset(f, info, values, cell_union)) {
        result.counterexample = std::move(cex);
        return result;
      }
    }
    if (auto cex = test_subset(f, info, values, subset)) {
      result.counterexample = std::move(cex);
      return result;
    }
  }
  return result;
}

bool AgreementResult::hypotheses_hold() const {
  if (!equal_blindspots || !common_information) return false;
  for (bool d : divisible) {
    if (!d) return false;
  }
  for (const GstpResult& g : gstp) {
    if (!g.passed()) return false;
  }
  return true;
}

bool AgreementResult::decisions_equal() const {
  for (size_t i = 1; i < decisions.size(); ++i) {
    if (decisions[i] != decisions[0]) return false;
  }
  return !decisions.empty();
}

AgreementResult agreement_check(const Profile& profile,
                                const DecisionFunction& f, int actual,
                                const GstpOptions& options) {
  const int n = profile.space()->size();
  const int players = profile.player_count();
  if (actual < 0 || actual >= n) {
    throw ValidationError("agree", "actual state index out of range");
  }
  AgreementResult result;

  auto evaluate_at = [&](int player, int state) {
    try {
      return f.evaluate(profile.structure(player).set(state));
    } catch (const Error& e) {
      throw ValidationError(
          "agree", std::string(e.what()) + " (player " +
                       profile.player(player) + ", state " +
                       profile.space()->label(state) + ")");
    }
  };

  for (int i = 0; i < players; ++i) {
    result.decisions.push_back(evaluate_at(i, actual));
  }

  // Hypothesis (1): divisibility, per player.
  for (int i = 0; i < players; ++i) {
    bool divisible = check_structure_properties(profile.structure(i)).divisible;
    result.divisible.push_back(divisible);
    if (!divisible && !result.divisible_failure_player) {
      result.divisible_failure_player = i;
    }
  }

  // Hypothesis (2): pairwise equal blindspot sets.
  result.equal_blindspots = true;
  {
    Event first = blindspots(profile.structure(0));
    for (int i = 1; i < players && result.equal_blindspots; ++i) {
      if (blindspots(profile.structure(i)) != first) {
        result.equal_blindspots = false;
        result.blindspot_witness = {0, i};
      }
    }
  }

  // Hypothesis (3): f is an informational decision function (GSTP), per
  // player.
  for (int i = 0; i < players; ++i) {
    GstpResult g = satisfies_gstp(f, profile.structure(i), options);
    if (!g.passed() && !result.gstp_failure_player) {
      result.gstp_failure_player = i;
    }
    result.gstp.push_back(std::move(g));
  }

  // Hypothesis (4): the decisions are common information at `actual`:
  // I^N(actual) within every E^i = { v | f(I^i(v)) = d^i }.
  result.common_information = true;
  const Event reachable = group_info(profile, actual);
  for (int i = 0; i < players && result.common_information; ++i) {
    for (int v = reachable.first(); v >= 0 && result.common_information;
         v = reachable.next(v)) {
      if (evaluate_at(i, v) != result.decisions[i]) {
        result.common_information = false;
        result.common_information_witness = {i, v};
      }
    }
  }

  return result;
}

}  // namespace doxa
