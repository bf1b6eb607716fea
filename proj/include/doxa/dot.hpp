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

#include <optional>
#include <string>

#include "doxa/games.hpp"
#include "doxa/model_io.hpp"

namespace doxa {

struct DotOptions {
  /// Single digraph with player-labelled edges instead of one digraph per
  /// player.
  bool merged = false;
  /// Label edges with accessibility degrees (game exports only).
  bool degrees = false;
  /// Restrict output to one player id.
  std::optional<std::string> player;
};

/// Byte-deterministic DOT text: states in index order, players in model
/// order, edges ordered (from, to). Blindspot nodes are drawn dashed.
std::string export_dot(const ModelFile& model, const DotOptions& options = {});

/// DOT text for the type-induced relations of an extension, optionally with
/// exact degree labels on the edges.
std::string export_dot(const ExtensionSpace& ext,
                       const DotOptions& options = {});

}  // namespace doxa
