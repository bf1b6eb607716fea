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

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "doxa/report.hpp"
#include "doxa/state_space.hpp"

namespace doxa {

/// A doxastic accessibility relation: a set of ordered state pairs over a
/// finite state space, stored row-wise as successor sets.
class Relation {
 public:
  Relation(StateSpaceRef space, std::vector<Event> successors);
  static Relation empty(StateSpaceRef space);
  static Relation identity(StateSpaceRef space);
  static Relation full(StateSpaceRef space);
  static Relation from_pairs(StateSpaceRef space,
                             const std::vector<std::pair<int, int>>& pairs);

  const StateSpaceRef& space() const noexcept { return space_; }
  int size() const noexcept { return static_cast<int>(successors_.size()); }
  bool contains(int from, int to) const {
    return successors_.at(from).contains(to);
  }
  const Event& successors(int from) const { return successors_.at(from); }
  std::vector<std::pair<int, int>> pairs() const;
  int pair_count() const;

  Relation union_with(const Relation& other) const;
  bool operator==(const Relation& other) const;

 private:
  StateSpaceRef space_;
  std::vector<Event> successors_;
};

/// The equivalent presentation of a relation as a total map from states to
/// information sets.
class InfoStructure {
 public:
  InfoStructure(StateSpaceRef space, std::vector<Event> sets);

  const StateSpaceRef& space() const noexcept { return space_; }
  int size() const noexcept { return static_cast<int>(sets_.size()); }
  const Event& set(int state) const { return sets_.at(state); }

  /// Union of the information sets of the states in `e`.
  Event image(const Event& e) const;
  /// image over the whole space.
  Event image_all() const;

  bool operator==(const InfoStructure& other) const;

 private:
  StateSpaceRef space_;
  std::vector<Event> sets_;
};

InfoStructure info_from_relation(const Relation& rel);
Relation relation_from_info(const InfoStructure& info);
Event image(const InfoStructure& info, const Event& e);

/// Relation-side property flags. A false flag carries the lexicographically
/// first counterexample (by state index order).
struct RelationProperties {
  bool serial = false;
  bool transitive = false;
  bool euclidean = false;
  /// State with no successor.
  std::optional<int> serial_witness;
  /// (w, d, v): w~>d, d~>v, not w~>v.
  std::optional<std::array<int, 3>> transitive_witness;
  /// (w, u, v): w~>u, w~>v, not u~>v.
  std::optional<std::array<int, 3>> euclidean_witness;
};

/// Structure-side property flags, mirrors of the relation side.
struct StructureProperties {
  bool viable = false;
  bool inclusive = false;
  bool mutual = false;
  bool divisible = false;
  bool partitional = false;
  /// State with empty information set.
  std::optional<int> viable_witness;
  /// (w, u): u in I(w) but I(u) not within I(w).
  std::optional<std::array<int, 2>> inclusive_witness;
  /// (w, u, v): u, v in I(w) but v not in I(u).
  std::optional<std::array<int, 3>> mutual_witness;
};

RelationProperties check_relation_properties(const Relation& rel);
StructureProperties check_structure_properties(const InfoStructure& info);

/// States accessible from nowhere: { w | for all v, w not in I(v) }.
Event blindspots(const InfoStructure& info);

/// Re-validates, on this instance, the relation/structure property
/// correspondences, the disjoint-or-equal law for divisible structures, the
/// blindspot complement laws, and the divisible-structure blindspot facts.
/// A failed check indicates an implementation bug and carries a witness.
TheoremReport verify_frame_theorems(const Relation& rel);

}  // namespace doxa
