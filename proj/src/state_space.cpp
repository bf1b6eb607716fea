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

#include "doxa/state_space.hpp"

#include <stdexcept>

#include "doxa/errors.hpp"

namespace doxa {

StateSpace::StateSpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw ValidationError("states", "state space must have at least one state");
  }
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (labels_[i].empty()) {
      throw ValidationError("states", "state labels must be nonempty");
    }
    if (!index_.emplace(labels_[i], i).second) {
      throw ValidationError("states",
                            "duplicate state label \"" + labels_[i] + "\"");
    }
  }
}

std::optional<int> StateSpace::find(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int StateSpace::require(std::string_view label) const {
  auto found = find(label);
  if (!found) {
    throw ValidationError("states",
                          "unknown state label \"" + std::string(label) + "\"");
  }
  return *found;
}

StateSpaceRef make_space(std::vector<std::string> labels) {
  return std::make_shared<const StateSpace>(std::move(labels));
}

StateSpaceRef make_space(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back("w" + std::to_string(i));
  return make_space(std::move(labels));
}

Event Event::none(int width) {
  return Event(boost::dynamic_bitset<std::uint64_t>(width));
}

Event Event::all(int width) {
  boost::dynamic_bitset<std::uint64_t> bits(width);
  bits.set();
  return Event(std::move(bits));
}

Event Event::single(int width, int state) {
  Event e = none(width);
  e.insert(state);
  return e;
}

Event Event::of(int width, std::initializer_list<int> states) {
  Event e = none(width);
  for (int s : states) e.insert(s);
  return e;
}

Event Event::of(int width, const std::vector<int>& states) {
  Event e = none(width);
  for (int s : states) e.insert(s);
  return e;
}

Event Event::from_mask(int width, std::uint64_t mask) {
  if (width > 64) throw std::invalid_argument("mask events capped at 64 states");
  Event e = none(width);
  for (int s = 0; s < width; ++s) {
    if (mask & (std::uint64_t{1} << s)) e.insert(s);
  }
  return e;
}

void Event::check_width(const Event& other) const {
  if (bits_.size() != other.bits_.size()) {
    throw std::invalid_argument("events over different state spaces");
  }
}

bool Event::is_subset_of(const Event& other) const {
  check_width(other);
  return bits_.is_subset_of(other.bits_);
}

bool Event::intersects(const Event& other) const {
  check_width(other);
  return bits_.intersects(other.bits_);
}

Event& Event::operator|=(const Event& other) {
  check_width(other);
  bits_ |= other.bits_;
  return *this;
}

Event& Event::operator&=(const Event& other) {
  check_width(other);
  bits_ &= other.bits_;
  return *this;
}

Event& Event::operator-=(const Event& other) {
  check_width(other);
  bits_ -= other.bits_;
  return *this;
}

Event Event::complement() const {
  Event e(*this);
  e.bits_.flip();
  return e;
}

int Event::first() const {
  auto pos = bits_.find_first();
  return pos == boost::dynamic_bitset<std::uint64_t>::npos
             ? -1
             : static_cast<int>(pos);
}

int Event::next(int state) const {
  auto pos = bits_.find_next(state);
  return pos == boost::dynamic_bitset<std::uint64_t>::npos
             ? -1
             : static_cast<int>(pos);
}

std::vector<int> Event::members() const {
  std::vector<int> out;
  out.reserve(bits_.count());
  for (int s = first(); s >= 0; s = next(s)) out.push_back(s);
  return out;
}

std::uint64_t Event::to_mask() const {
  if (width() > 64) throw std::invalid_argument("mask events capped at 64 states");
  std::uint64_t mask = 0;
  for (int s = first(); s >= 0; s = next(s)) mask |= std::uint64_t{1} << s;
  return mask;
}

bool Event::operator<(const Event& other) const {
  if (bits_.size() != other.bits_.size()) {
    return bits_.size() < other.bits_.size();
  }
  return bits_ < other.bits_;
}

std::string Event::to_string(const StateSpace& space) const {
  std::string out = "{";
  bool first_member = true;
  for (int s = first(); s >= 0; s = next(s)) {
    if (!first_member) out += ",";
    out += space.label(s);
    first_member = false;
  }
  out += "}";
  return out;
}

Event operator|(Event lhs, const Event& rhs) { return lhs |= rhs; }
Event operator&(Event lhs, const Event& rhs) { return lhs &= rhs; }
Event operator-(Event lhs, const Event& rhs) { return lhs -= rhs; }

}  // namespace doxa
