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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "doxa/errors.hpp"
#include "doxa/group.hpp"
#include "doxa/rational.hpp"
#include "doxa/report.hpp"
#include "doxa/state_space.hpp"

namespace doxa {

/// A decision outcome: an exact rational or an opaque text label. Equality
/// is exact in both cases; there is no tolerance.
class DecisionValue {
 public:
  static DecisionValue rational(Rational value) {
    return DecisionValue(std::move(value));
  }
  static DecisionValue label(std::string value) {
    return DecisionValue(std::move(value));
  }

  bool is_rational() const noexcept {
    return std::holds_alternative<Rational>(value_);
  }
  const Rational& rational_value() const { return std::get<Rational>(value_); }
  const std::string& label_value() const {
    return std::get<std::string>(value_);
  }

  bool operator==(const DecisionValue& other) const {
    return value_ == other.value_;
  }
  bool operator!=(const DecisionValue& other) const {
    return value_ != other.value_;
  }
  bool operator<(const DecisionValue& other) const {
    return value_ < other.value_;
  }

  std::string to_string() const;

 private:
  explicit DecisionValue(Rational r) : value_(std::move(r)) {}
  explicit DecisionValue(std::string s) : value_(std::move(s)) {}
  std::variant<Rational, std::string> value_;
};

/// Thrown when a decision function is applied outside its domain.
class UndefinedDecisionError : public Error {
 public:
  explicit UndefinedDecisionError(Event at)
      : Error("decision function undefined at event"), at_(std::move(at)) {}
  const Event& at() const noexcept { return at_; }

 private:
  Event at_;
};

/// Thrown when a posterior is conditioned on a zero-probability event.
class ZeroProbabilityConditioningError : public Error {
 public:
  explicit ZeroProbabilityConditioningError(Event at)
      : Error("conditioning on an event of prior probability zero"),
        at_(std::move(at)) {}
  const Event& at() const noexcept { return at_; }

 private:
  Event at_;
};

/// An informational decision function f: 2^Omega -> D, either an explicit
/// event table or the conditional probability of a target event under an
/// exact prior.
class DecisionFunction {
 public:
  struct Table {
    std::map<Event, DecisionValue> entries;
    std::optional<DecisionValue> fallback;
  };
  struct Posterior {
    std::vector<Rational> prior;  // indexed by state, sums to exactly 1
    Event target;
  };

  static DecisionFunction table(std::map<Event, DecisionValue> entries,
                                std::optional<DecisionValue> fallback);
  /// Throws ValidationError unless prior entries are nonnegative and sum
  /// to exactly 1 and the target width matches.
  static DecisionFunction posterior(std::vector<Rational> prior, Event target);

  /// Table lookup, or prior(target & e) / prior(e). Throws
  /// UndefinedDecisionError / ZeroProbabilityConditioningError.
  DecisionValue evaluate(const Event& e) const;

  bool is_posterior() const noexcept {
    return std::holds_alternative<Posterior>(fn_);
  }
  const Posterior& posterior_data() const { return std::get<Posterior>(fn_); }
  const Table& table_data() const { return std::get<Table>(fn_); }

 private:
  explicit DecisionFunction(Table t) : fn_(std::move(t)) {}
  explicit DecisionFunction(Posterior p) : fn_(std::move(p)) {}
  std::variant<Table, Posterior> fn_;
};

DecisionValue evaluate(const DecisionFunction& f, const Event& e);

/// A nonempty subset S on which f is constantly d across information sets
/// but f of the union of those sets differs.
struct GstpCounterexample {
  Event subset;
  DecisionValue decision;
};

struct GstpResult {
  ScanMode mode = ScanMode::kExhaustive;
  std::optional<GstpCounterexample> counterexample;
  bool passed() const noexcept { return !counterexample.has_value(); }
};

struct GstpOptions {
  /// Exhaustive over all subsets while the space has at most this many
  /// states; sampled above it.
  int exhaustive_limit = 12;
  int min_samples = 100000;
  std::uint64_t seed = 0x6473747000000001ULL;
};

/// Checks the generalized sure-thing principle: for every nonempty S with
/// f(I(v)) constant over v in S, f of the union of those information sets
/// equals that constant. Exhaustive in canonical subset (mask) order when
/// small; otherwise unions of distinct information cells plus seeded random
/// subsets, with the mode recorded in the result.
GstpResult satisfies_gstp(const DecisionFunction& f, const InfoStructure& info,
                          const GstpOptions& options = {});

/// Evaluation failure annotated with where it happened.
struct AgreementError {
  int player = -1;
  int state = -1;
  std::string message;
};

/// Everything the agreement theorem talks about, evaluated on one instance:
/// the per-player decisions, the four hypotheses with witnesses, and the
/// conclusion. When every hypothesis flag is true the conclusion must hold.
struct AgreementResult {
  std::vector<DecisionValue> decisions;

  std::vector<bool> divisible;
  std::optional<int> divisible_failure_player;

  bool equal_blindspots = false;
  /// Pair of players with different blindspot sets.
  std::optional<std::pair<int, int>> blindspot_witness;

  std::vector<GstpResult> gstp;
  std::optional<int> gstp_failure_player;

  bool common_information = false;
  /// (player i, state v) with v in I^N(actual) but f(I^i(v)) != d^i.
  std::optional<std::pair<int, int>> common_information_witness;

  bool hypotheses_hold() const;
  bool decisions_equal() const;
  /// hypotheses_hold() && !decisions_equal(); never true if the
  /// implementation is correct.
  bool theorem_violated() const {
    return hypotheses_hold() && !decisions_equal();
  }
};

/// Evaluates d^i = f(I^i(actual)) for every player and checks the four
/// agreement-theorem hypotheses: divisibility, equal blindspots, GSTP, and
/// the decisions being common information at `actual`. Evaluation errors
/// are rethrown as ValidationError annotated with player and state.
AgreementResult agreement_check(const Profile& profile,
                                const DecisionFunction& f, int actual,
                                const GstpOptions& options = {});

}  // namespace doxa
