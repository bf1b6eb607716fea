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

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace doxa {

/// A finite, ordered state space. States are addressed by dense indices
/// 0..size()-1 internally and by their text labels at the boundaries.
/// Immutable after construction.
class StateSpace {
 public:
  /// Throws ValidationError unless labels are nonempty, pairwise distinct,
  /// and there is at least one of them.
  explicit StateSpace(std::vector<std::string> labels);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::string& label(int state) const { return labels_.at(state); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<int> find(std::string_view label) const;
  /// Like find() but throws ValidationError for unknown labels.
  int require(std::string_view label) const;

  bool operator==(const StateSpace& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int, std::less<>> index_;
};

using StateSpaceRef = std::shared_ptr<const StateSpace>;

StateSpaceRef make_space(std::vector<std::string> labels);
/// Convenience space with labels "w1".."wn".
StateSpaceRef make_space(int n);

/// A subset of a state space, held as a membership mask over state indices.
/// Set semantics: no duplicates, order-independent equality.
class Event {
 public:
  Event() = default;
  static Event none(int width);
  static Event all(int width);
  static Event single(int width, int state);
  static Event of(int width, std::initializer_list<int> states);
  static Event of(int width, const std::vector<int>& states);
  /// Bit s of mask (binary counting order) decides membership of state s.
  /// Requires width <= 64.
  static Event from_mask(int width, std::uint64_t mask);

  int width() const noexcept { return static_cast<int>(bits_.size()); }
  bool contains(int state) const { return bits_.test(state); }
  int count() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }
  bool is_universe() const { return bits_.all() && width() > 0; }

  Event& insert(int state) {
    bits_.set(state);
    return *this;
  }
  Event& erase(int state) {
    bits_.reset(state);
    return *this;
  }

  bool is_subset_of(const Event& other) const;
  bool intersects(const Event& other) const;

  Event& operator|=(const Event& other);
  Event& operator&=(const Event& other);
  Event& operator-=(const Event& other);
  Event complement() const;

  /// Smallest member, or -1 when empty.
  int first() const;
  /// Smallest member greater than `state`, or -1.
  int next(int state) const;
  std::vector<int> members() const;

  /// The mask in binary counting order. Requires width <= 64.
  std::uint64_t to_mask() const;

  bool operator==(const Event& other) const { return bits_ == other.bits_; }
  bool operator!=(const Event& other) const { return bits_ != other.bits_; }
  /// Total order (width first, then mask value); used for canonical
  /// first-witness selection and map keys.
  bool operator<(const Event& other) const;

  /// Comma-separated labels in index order, e.g. "{w1,w2}".
  std::string to_string(const StateSpace& space) const;

 private:
  explicit Event(boost::dynamic_bitset<std::uint64_t> bits)
      : bits_(std::move(bits)) {}
  void check_width(const Event& other) const;

  boost::dynamic_bitset<std::uint64_t> bits_;
};

Event operator|(Event lhs, const Event& rhs);
Event operator&(Event lhs, const Event& rhs);
Event operator-(Event lhs, const Event& rhs);

}  // namespace doxa
