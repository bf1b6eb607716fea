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

#include "doxa/frames.hpp"

#include <string>

#include "doxa/errors.hpp"

namespace doxa {
namespace {

void check_rows(const StateSpaceRef& space, const std::vector<Event>& rows,
                const char* what) {
  if (!space) throw ValidationError(what, "null state space");
  if (static_cast<int>(rows.size()) != space->size()) {
    throw ValidationError(what, "one row per state required");
  }
  for (const Event& row : rows) {
    if (row.width() != space->size()) {
      throw ValidationError(what, "row width must match the state space");
    }
  }
}

std::string pair_text(const StateSpace& space, int a, int b) {
  return "(" + space.label(a) + "," + space.label(b) + ")";
}

}  // namespace

Relation::Relation(StateSpaceRef space, std::vector<Event> successors)
    : space_(std::move(space)), successors_(std::move(successors)) {
  check_rows(space_, successors_, "relation");
}

Relation Relation::empty(StateSpaceRef space) {
  int n = space->size();
  return Relation(std::move(space), std::vector<Event>(n, Event::none(n)));
}

Relation Relation::identity(StateSpaceRef space) {
  int n = space->size();
  std::vector<Event> rows;
  rows.reserve(n);
  for (int s = 0; s < n; ++s) rows.push_back(Event::single(n, s));
  return Relation(std::move(space), std::move(rows));
}

Relation Relation::full(StateSpaceRef space) {
  int n = space->size();
  return Relation(std::move(space), std::vector<Event>(n, Event::all(n)));
}

Relation Relation::from_pairs(StateSpaceRef space,
                              const std::vector<std::pair<int, int>>& pairs) {
  int n = space->size();
  std::vector<Event> rows(n, Event::none(n));
  for (auto [from, to] : pairs) {
    if (from < 0 || from >= n || to < 0 || to >= n) {
      throw ValidationError("relation", "state index out of range");
    }
    rows[from].insert(to);
  }
  return Relation(std::move(space), std::move(rows));
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int from = 0; from < size(); ++from) {
    for (int to = successors_[from].first(); to >= 0;
         to = successors_[from].next(to)) {
      out.emplace_back(from, to);
    }
  }
  return out;
}

int Relation::pair_count() const {
  int total = 0;
  for (const Event& row : successors_) total += row.count();
  return total;
}

Relation Relation::union_with(const Relation& other) const {
  if (size() != other.size()) {
    throw ValidationError("relation", "union over different state spaces");
  }
  std::vector<Event> rows = successors_;
  for (int s = 0; s < size(); ++s) rows[s] |= other.successors_[s];
  return Relation(space_, std::move(rows));
}

bool Relation::operator==(const Relation& other) const {
  return *space_ == *other.space_ && successors_ == other.successors_;
}

InfoStructure::InfoStructure(StateSpaceRef space, std::vector<Event> sets)
    : space_(std::move(space)), sets_(std::move(sets)) {
  check_rows(space_, sets_, "info");
}

Event InfoStructure::image(const Event& e) const {
  Event out = Event::none(size());
  for (int s = e.first(); s >= 0; s = e.next(s)) out |= sets_[s];
  return out;
}

Event InfoStructure::image_all() const {
  Event out = Event::none(size());
  for (const Event& set : sets_) out |= set;
  return out;
}

bool InfoStructure::operator==(const InfoStructure& other) const {
  return *space_ == *other.space_ && sets_ == other.sets_;
}

// Both objects are the same state-indexed family of
// successor sets read as two different structures.
InfoStructure info_from_relation(const Relation& rel) {
  std::vector<Event> sets;
  sets.reserve(rel.size());
  for (int s = 0; s < rel.size(); ++s) sets.push_back(rel.successors(s));
  return InfoStructure(rel.space(), std::move(sets));
}

Relation relation_from_info(const InfoStructure& info) {
  std::vector<Event> rows;
  rows.reserve(info.size());
  for (int s = 0; s < info.size(); ++s) rows.push_back(info.set(s));
  return Relation(info.space(), std::move(rows));
}

Event image(const InfoStructure& info, const Event& e) {
  return info.image(e);
}

RelationProperties check_relation_properties(const Relation& rel) {
  RelationProperties out;
  const int n = rel.size();

  out.serial = true;
  for (int w = 0; w < n && out.serial; ++w) {
    if (rel.successors(w).empty()) {
      out.serial = false;
      out.serial_witness = w;
    }
  }

  out.transitive = true;
  for (int w = 0; w < n && out.transitive; ++w) {
    const Event& succ_w = rel.successors(w);
    for (int d = succ_w.first(); d >= 0 && out.transitive; d = succ_w.next(d)) {
      Event beyond = rel.successors(d) - succ_w;
      if (!beyond.empty()) {
        out.transitive = false;
        out.transitive_witness = {w, d, beyond.first()};
      }
    }
  }

  out.euclidean = true;
  for (int w = 0; w < n && out.euclidean; ++w) {
    const Event& succ_w = rel.successors(w);
    for (int u = succ_w.first(); u >= 0 && out.euclidean; u = succ_w.next(u)) {
      Event unreached = succ_w - rel.successors(u);
      if (!unreached.empty()) {
        out.euclidean = false;
        out.euclidean_witness = {w, u, unreached.first()};
      }
    }
  }

  return out;
}

StructureProperties check_structure_properties(const InfoStructure& info) {
  StructureProperties out;
  const int n = info.size();

  out.viable = true;
  for (int w = 0; w < n && out.viable; ++w) {
    if (info.set(w).empty()) {
      out.viable = false;
      out.viable_witness = w;
    }
  }

  out.inclusive = true;
  for (int w = 0; w < n && out.inclusive; ++w) {
    const Event& set_w = info.set(w);
    for (int u = set_w.first(); u >= 0 && out.inclusive; u = set_w.next(u)) {
      if (!info.set(u).is_subset_of(set_w)) {
        out.inclusive = false;
        out.inclusive_witness = {w, u};
      }
    }
  }

  out.mutual = true;
  for (int w = 0; w < n && out.mutual; ++w) {
    const Event& set_w = info.set(w);
    for (int u = set_w.first(); u >= 0 && out.mutual; u = set_w.next(u)) {
      Event missing = set_w - info.set(u);
      if (!missing.empty()) {
        out.mutual = false;
        out.mutual_witness = {w, u, missing.first()};
      }
    }
  }

  out.divisible = out.viable && out.inclusive && out.mutual;
  out.partitional = out.divisible && info.image_all().is_universe();
  return out;
}

Event blindspots(const InfoStructure& info) {
  return info.image_all().complement();
}

TheoremReport verify_frame_theorems(const Relation& rel) {
  TheoremReport report;
  const StateSpace& space = *rel.space();
  const int n = rel.size();
  const InfoStructure info = info_from_relation(rel);
  const RelationProperties rp = check_relation_properties(rel);
  const StructureProperties sp = check_structure_properties(info);

  auto equivalence = [&](const char* name, bool lhs, bool rhs) {
    if (lhs == rhs) {
      report.add_pass(name);
    } else {
      report.add_fail(name, std::string("relation side ") +
                                (lhs ? "true" : "false") +
                                ", structure side " + (rhs ? "true" : "false"));
    }
  };
  equivalence("serial-iff-viable", rp.serial, sp.viable);
  equivalence("transitive-iff-inclusive", rp.transitive, sp.inclusive);
  equivalence("euclidean-iff-mutual", rp.euclidean, sp.mutual);

  if (sp.divisible) {
    bool ok = true;
    std::string witness;
    for (int w = 0; w < n && ok; ++w) {
      for (int v = w + 1; v < n && ok; ++v) {
        const Event& a = info.set(w);
        const Event& b = info.set(v);
        if (a.intersects(b) && a != b) {
          ok = false;
          witness = pair_text(space, w, v);
        }
      }
    }
    if (ok) {
      report.add_pass("divisible-cells-disjoint-or-equal");
    } else {
      report.add_fail("divisible-cells-disjoint-or-equal", witness);
    }
  } else {
    report.add_not_applicable("divisible-cells-disjoint-or-equal",
                              "structure is not divisible");
  }

  const Event image_all = info.image_all();
  const Event blind = blindspots(info);
  if (!image_all.intersects(blind) && (image_all | blind).is_universe()) {
    report.add_pass("blindspot-complement-laws");
  } else {
    report.add_fail("blindspot-complement-laws",
                    "image " + image_all.to_string(space) + ", blindspots " +
                        blind.to_string(space));
  }

  if (sp.divisible) {
    bool ok = true;
    std::string witness;
    for (int w = 0; w < n && ok; ++w) {
      const bool self_inaccessible = !info.set(w).contains(w);
      if (self_inaccessible != blind.contains(w)) {
        ok = false;
        witness = space.label(w);
      }
    }
    if (ok) {
      report.add_pass("blindspot-iff-not-self-accessible");
    } else {
      report.add_fail("blindspot-iff-not-self-accessible", witness);
    }

    ok = true;
    for (int w = 0; w < n && ok; ++w) {
      const Event& set_w = info.set(w);
      for (int v = set_w.first(); v >= 0 && ok; v = set_w.next(v)) {
        if (!info.set(v).contains(v) || info.set(v) != set_w) {
          ok = false;
          witness = pair_text(space, w, v);
        }
      }
    }
    if (ok) {
      report.add_pass("members-share-their-cell");
    } else {
      report.add_fail("members-share-their-cell", witness);
    }

    ok = true;
    for (int v = image_all.first(); v >= 0 && ok; v = image_all.next(v)) {
      if (!info.set(v).contains(v)) {
        ok = false;
        witness = space.label(v);
      }
    }
    if (ok) {
      report.add_pass("image-states-self-accessible");
    } else {
      report.add_fail("image-states-self-accessible", witness);
    }
  } else {
    report.add_not_applicable("blindspot-iff-not-self-accessible",
                              "structure is not divisible");
    report.add_not_applicable("members-share-their-cell",
                              "structure is not divisible");
    report.add_not_applicable("image-states-self-accessible",
                              "structure is not divisible");
  }

  // Round trip through the other presentation.
  if (relation_from_info(info) == rel) {
    report.add_pass("presentation-round-trip");
  } else {
    report.add_fail("presentation-round-trip",
                    "round trip changed the relation");
  }

  return report;
}

}  // namespace doxa
