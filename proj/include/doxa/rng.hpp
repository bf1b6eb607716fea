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

#include "doxa/state_space.hpp"

namespace doxa {

/// SplitMix64. Fixed algorithm so that seeded suites replay bit-identically
/// across machines; the name/version below is printed in generator output
/// headers.
class SplitMix64 {
 public:
  static constexpr const char* kName = "splitmix64-v1";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Lemire's debiased multiply-shift.
    while (true) {
      unsigned __int128 m =
          static_cast<unsigned __int128>(next()) * bound;
      std::uint64_t low = static_cast<std::uint64_t>(m);
      if (low < bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        if (low < threshold) continue;
      }
      return static_cast<std::uint64_t>(m >> 64);
    }
  }

  /// Uniform integer in [lo, hi], inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// True with probability num/den.
  bool chance(int num, int den) {
    return below(static_cast<std::uint64_t>(den)) <
           static_cast<std::uint64_t>(num);
  }

  /// Independent substream; deterministic in (current state, stream id).
  SplitMix64 fork(std::uint64_t stream) {
    return SplitMix64(next() ^ (stream * 0xd1b54a32d192ed03ULL));
  }

  /// Each state of the width included independently with probability 1/2.
  Event event(int width) {
    Event e = Event::none(width);
    for (int s = 0; s < width; ++s) {
      if (chance(1, 2)) e.insert(s);
    }
    return e;
  }

  /// Uniform random subset of `base`.
  Event subset_of(const Event& base) {
    Event e = Event::none(base.width());
    for (int s = base.first(); s >= 0; s = base.next(s)) {
      if (chance(1, 2)) e.insert(s);
    }
    return e;
  }

 private:
  std::uint64_t state_;
};

}  // namespace doxa
