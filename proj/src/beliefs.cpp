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

#include <algorithm>

#include "doxa/errors.hpp"
#include "doxa/rng.hpp"

namespace doxa {

CredalSet::CredalSet(StateSpaceRef space,
                     std::vector<std::vector<Rational>> measures)
    : space_(std::move(space)) {
  if (!space_) throw ValidationError("credal", "null state space");
  if (measures.empty()) {
    throw ValidationError("credal", "credal set must be nonempty");
  }
  for (const auto& pmf : measures) {
    if (static_cast<int>(pmf.size()) != space_->size()) {
      throw ValidationError("credal", "measure has wrong state count");
    }
    Rational total = 0;
    for (const Rational& p : pmf) {
      if (p < 0) throw ValidationError("credal", "negative probability");
      total += p;
    }
    if (total != 1) {
      throw ValidationError(
          "credal", "measure must sum to exactly 1, got " +
                        format_rational(total));
    }
    if (std::find(measures_.begin(), measures_.end(), pmf) == measures_.end()) {
      measures_.push_back(pmf);
    }
  }
}

Rational CredalSet::mass(int k, const Event& e) const {
  const auto& pmf = measures_.at(k);
  Rational total = 0;
  for (int s = e.first(); s >= 0; s = e.next(s)) total += pmf[s];
  return total;
}

Event CredalSet::support_union() const {
  Event support = Event::none(space_->size());
  for (const auto& pmf : measures_) {
    for (int s = 0; s < space_->size(); ++s) {
      if (pmf[s] > 0) support.insert(s);
    }
  }
  return support;
}

Event believes(const InfoStructure& info, const Event& e) {
  Event out = Event::none(info.size());
  for (int w = 0; w < info.size(); ++w) {
    if (info.set(w).is_subset_of(e)) out.insert(w);
  }
  return out;
}

namespace {

bool check_k(const InfoStructure& info, const Event& e, const Event& f) {
  // B(E u F) & B(~E) within BF, the stated form.
  Event lhs = believes(info, e | f) & believes(info, e.complement());
  return lhs.is_subset_of(believes(info, f));
}

bool check_d(const InfoStructure& info, const Event& e) {
  // BE within ~B~E.
  return !believes(info, e).intersects(believes(info, e.complement()));
}

bool check_4(const InfoStructure& info, const Event& e) {
  Event be = believes(info, e);
  return be.is_subset_of(believes(info, be));
}

bool check_5(const InfoStructure& info, const Event& e) {
  Event not_be = believes(info, e).complement();
  return not_be.is_subset_of(believes(info, not_be));
}

// Events that are guaranteed to witness any D/4/5 failure: the empty event
// (D), every information set (4), and every singleton complement (5) —
// plus the universe and singletons for good measure.
std::vector<Event> seed_events(const InfoStructure& info) {
  const int n = info.size();
  std::vector<Event> seeds;
  seeds.push_back(Event::none(n));
  seeds.push_back(Event::all(n));
  for (int s = 0; s < n; ++s) {
    seeds.push_back(Event::single(n, s));
    seeds.push_back(Event::single(n, s).complement());
  }
  for (int s = 0; s < n; ++s) {
    seeds.push_back(info.set(s));
    seeds.push_back(info.set(s).complement());
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return seeds;
}

}  // namespace

AxiomReport audit_axioms(const InfoStructure& info,
                         const AuditOptions& options) {
  const int n = info.size();
  AxiomReport report;
  report.axiom_n = believes(info, Event::all(n)).is_universe();
  report.axiom_k = true;
  report.axiom_d = true;
  report.axiom_4 = true;
  report.axiom_5 = true;

  auto test_event = [&](const Event& e) {
    if (report.axiom_d && !check_d(info, e)) {
      report.axiom_d = false;
      report.d_witness = e;
    }
    if (report.axiom_4 && !check_4(info, e)) {
      report.axiom_4 = false;
      report.four_witness = e;
    }
    if (report.axiom_5 && !check_5(info, e)) {
      report.axiom_5 = false;
      report.five_witness = e;
    }
  };
  auto test_pair = [&](const Event& e, const Event& f) {
    if (report.axiom_k && !check_k(info, e, f)) {
      report.axiom_k = false;
      report.k_witness = {e, f};
    }
  };

  if (n <= options.exhaustive_limit) {
    report.mode = ScanMode::kExhaustive;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      test_event(Event::from_mask(n, mask));
    }
    for (std::uint64_t em = 0; em < limit && report.axiom_k; ++em) {
      Event e = Event::from_mask(n, em);
      for (std::uint64_t fm = 0; fm < limit && report.axiom_k; ++fm) {
        test_pair(e, Event::from_mask(n, fm));
      }
    }
    return report;
  }

  report.mode = ScanMode::kSampled;
  const std::vector<Event> seeds = seed_events(info);
  for (const Event& e : seeds) test_event(e);
  for (const Event& e : seeds) {
    for (const Event& f : seeds) test_pair(e, f);
  }
  SplitMix64 rng(options.seed ^ static_cast<std::uint64_t>(n));
  for (int i = 0; i < options.min_samples; ++i) {
    Event e = rng.event(n);
    test_event(e);
    test_pair(e, rng.event(n));
  }
  return report;
}

TheoremReport check_axiom_correspondence(const InfoStructure& info,
                                         const AuditOptions& options) {
  TheoremReport report;
  const AxiomReport axioms = audit_axioms(info, options);
  const StructureProperties props = check_structure_properties(info);

  if (axioms.axiom_n) {
    report.add_pass("axiom-N");
  } else {
    report.add_fail("axiom-N", "B(universe) is not the universe");
  }
  if (axioms.axiom_k) {
    report.add_pass("axiom-K");
  } else {
    std::string witness;
    if (axioms.k_witness) {
      witness = axioms.k_witness->first.to_string(*info.space()) + ", " +
                axioms.k_witness->second.to_string(*info.space());
    }
    report.add_fail("axiom-K", witness);
  }

  auto equivalence = [&](const char* name, bool axiom, bool property,
                         const std::optional<Event>& witness) {
    if (axiom == property) {
      report.add_pass(name);
    } else {
      std::string detail = std::string("axiom side ") +
                           (axiom ? "true" : "false") + ", structure side " +
                           (property ? "true" : "false");
      if (witness) {
        detail += ", event " + witness->to_string(*info.space());
      }
      report.add_fail(name, detail);
    }
  };
  equivalence("D-iff-viable", axioms.axiom_d, props.viable, axioms.d_witness);
  equivalence("4-iff-inclusive", axioms.axiom_4, props.inclusive,
              axioms.four_witness);
  equivalence("5-iff-mutual", axioms.axiom_5, props.mutual,
              axioms.five_witness);
  return report;
}

std::optional<B1Violation> check_b1(const CredalSet& credal,
                                    const InfoStructure& info) {
  if (!(*credal.space() == *info.space())) {
    throw ValidationError("credal", "credal set over a different space");
  }
  const Event blind = blindspots(info);
  const Event supported = credal.support_union();
  for (int w = 0; w < info.size(); ++w) {
    const bool is_blind = blind.contains(w);
    const bool has_mass = supported.contains(w);
    if (is_blind && has_mass) {
      return B1Violation{w, B1Direction::kBlindspotWithPositiveMass};
    }
    if (!is_blind && !has_mass) {
      return B1Violation{w, B1Direction::kAccessibleWithAllZeroMass};
    }
  }
  return std::nullopt;
}

}  // namespace doxa
