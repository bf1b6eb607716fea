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

#include "doxa/beliefs.hpp"

#include <doctest.h>

#include "doxa/rng.hpp"
#include "doxa/search.hpp"

namespace doxa {
namespace {

InfoStructure figure_structure() {
  auto space = make_space(2);
  const Event w2 = Event::single(2, 1);
  return InfoStructure(space, {w2, w2});
}

TEST_CASE("believes: the figure, the universe, and the empty event") {
  const InfoStructure figure = figure_structure();
  CHECK(believes(figure, Event::single(2, 1)) == Event::all(2));
  CHECK(believes(figure, Event::all(2)) == Event::all(2));
  CHECK(believes(figure, Event::none(2)).empty());
}

TEST_CASE("audit: the figure satisfies KD45") {
  const AxiomReport report = audit_axioms(figure_structure());
  CHECK(report.mode == ScanMode::kExhaustive);
  CHECK(report.kd45());
}

TEST_CASE("audit: an empty information set breaks D at the empty event") {
  auto space = make_space(2);
  const InfoStructure info(space, {Event::none(2), Event::single(2, 1)});
  const AxiomReport report = audit_axioms(info);
  CHECK(report.axiom_n);
  CHECK(report.axiom_k);
  CHECK_FALSE(report.axiom_d);
  REQUIRE(report.d_witness.has_value());
  CHECK(report.d_witness->empty());
}

TEST_CASE("audit: non-mutual structure breaks 5 at {w2}") {
  auto space = make_space(2);
  const InfoStructure info(space, {Event::all(2), Event::single(2, 1)});
  const AxiomReport report = audit_axioms(info);
  CHECK(report.axiom_n);
  CHECK(report.axiom_k);
  CHECK(report.axiom_d);
  CHECK(report.axiom_4);
  CHECK_FALSE(report.axiom_5);
  REQUIRE(report.five_witness.has_value());
  CHECK(*report.five_witness == Event::single(2, 1));
}

TEST_CASE("axiom correspondence across every relation on up to 3 states") {
  for (int n = 1; n <= 3; ++n) {
    RelationEnumerator relations(n);
    while (auto rel = relations.next()) {
      const TheoremReport report =
          check_axiom_correspondence(info_from_relation(*rel));
      if (!report.all_applicable_and_passed()) {
        for (const auto& check : report.checks()) {
          if (!check.passed) FAIL(check.name, ": ", check.detail);
        }
      }
    }
  }
}

TEST_CASE("axiom correspondence on 1000 random structures at n <= 6") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.range(1, 6);
    auto space = make_space(n);
    std::vector<Event> rows;
    for (int s = 0; s < n; ++s) rows.push_back(rng.event(n));
    const InfoStructure info(space, std::move(rows));
    CHECK(check_axiom_correspondence(info).all_applicable_and_passed());
  }
}

TEST_CASE("sampled audits agree with structure properties on larger spaces") {
  SplitMix64 rng(19);
  AuditOptions options;
  options.min_samples = 2000;  // keep the test quick; seeds carry soundness
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.range(9, 16);
    auto space = make_space(n);
    std::vector<Event> rows;
    for (int s = 0; s < n; ++s) rows.push_back(rng.event(n));
    const InfoStructure info(space, std::move(rows));
    const AxiomReport report = audit_axioms(info, options);
    CHECK(report.mode == ScanMode::kSampled);
    CHECK(check_axiom_correspondence(info, options)
              .all_applicable_and_passed());
  }
}

TEST_CASE("belief monotonicity: E within F gives BE within BF") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.range(1, 8);
    auto space = make_space(n);
    std::vector<Event> rows;
    for (int s = 0; s < n; ++s) rows.push_back(rng.event(n));
    const InfoStructure info(space, std::move(rows));
    const Event f = rng.event(n);
    const Event e = rng.subset_of(f);
    CHECK(believes(info, e).is_subset_of(believes(info, f)));
  }
}

TEST_CASE("credal sets validate and deduplicate") {
  auto space = make_space(2);
  CHECK_THROWS_AS(CredalSet(space, {}), ValidationError);
  CHECK_THROWS_AS(
      CredalSet(space, {{Rational(1, 2), Rational(1, 3)}}),
      ValidationError);
  CHECK_THROWS_AS(
      CredalSet(space, {{Rational(3, 2), Rational(-1, 2)}}),
      ValidationError);
  const CredalSet dedup(space, {{Rational(1, 2), Rational(1, 2)},
                                {Rational(1, 2), Rational(1, 2)}});
  CHECK(dedup.measure_count() == 1);
}

TEST_CASE("B1 on the figure: point mass passes, uniform fails at w1") {
  const InfoStructure figure = figure_structure();
  const CredalSet point(figure.space(), {{Rational(0), Rational(1)}});
  CHECK_FALSE(check_b1(point, figure).has_value());

  const CredalSet uniform(figure.space(),
                          {{Rational(1, 2), Rational(1, 2)}});
  const auto violation = check_b1(uniform, figure);
  REQUIRE(violation.has_value());
  CHECK(violation->state == 0);
  CHECK(violation->direction == B1Direction::kBlindspotWithPositiveMass);
}

TEST_CASE("B1 on the identity structure with a uniform measure") {
  auto space = make_space(3);
  const InfoStructure identity =
      info_from_relation(Relation::identity(space));
  const CredalSet uniform(
      space, {{Rational(1, 3), Rational(1, 3), Rational(1, 3)}});
  CHECK_FALSE(check_b1(uniform, identity).has_value());
}

TEST_CASE("B1 pass is exactly support-union equals image") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.range(1, 6);
    auto space = make_space(n);
    std::vector<Event> rows;
    for (int s = 0; s < n; ++s) rows.push_back(rng.event(n));
    const InfoStructure info(space, std::move(rows));

    // A random credal set of up to three unit masses and mixtures.
    std::vector<std::vector<Rational>> measures;
    const int count = rng.range(1, 3);
    for (int m = 0; m < count; ++m) {
      std::vector<Rational> pmf(n, Rational(0));
      Event support = rng.event(n);
      if (support.empty()) support.insert(static_cast<int>(rng.below(n)));
      for (int s = support.first(); s >= 0; s = support.next(s)) {
        pmf[s] = Rational(1, support.count());
      }
      measures.push_back(std::move(pmf));
    }
    const CredalSet credal(space, std::move(measures));
    const bool pass = !check_b1(credal, info).has_value();
    CHECK(pass == (credal.support_union() == info.image_all()));
  }
}

TEST_CASE("N and K hold for every structure on up to 4 states") {
  for (int n = 1; n <= 4; ++n) {
    RelationEnumerator relations(n);
    while (auto rel = relations.next()) {
      const AxiomReport report = audit_axioms(info_from_relation(*rel));
      CHECK(report.axiom_n);
      CHECK(report.axiom_k);
    }
  }
}

}  // namespace
}  // namespace doxa
