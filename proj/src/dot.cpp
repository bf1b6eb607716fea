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

#include "doxa/dot.hpp"

#include <functional>
#include <vector>

#include "doxa/errors.hpp"

namespace doxa {
namespace {

std::string dot_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

struct PlayerGraph {
  std::string id;
  InfoStructure info;
  // Degree label for an edge, empty for none.
  std::function<std::string(int, int)> degree;
};

std::string render(const StateSpace& space,
                   const std::vector<PlayerGraph>& graphs,
                   const DotOptions& options) {
  std::string out;
  auto node_line = [&](int state, const std::string& attrs) {
    out += "  " + dot_quote(space.label(state));
    if (!attrs.empty()) out += " [" + attrs + "]";
    out += ";\n";
  };

  if (!options.merged) {
    bool first_graph = true;
    for (const PlayerGraph& graph : graphs) {
      if (!first_graph) out += "\n";
      first_graph = false;
      const Event blind = blindspots(graph.info);
      out += "digraph " + dot_quote("player_" + graph.id) + " {\n";
      out += "  rankdir=LR;\n";
      out += "  node [shape=circle];\n";
      for (int s = 0; s < space.size(); ++s) {
        node_line(s, blind.contains(s) ? "style=dashed" : "");
      }
      for (int from = 0; from < space.size(); ++from) {
        const Event& succ = graph.info.set(from);
        for (int to = succ.first(); to >= 0; to = succ.next(to)) {
          out += "  " + dot_quote(space.label(from)) + " -> " +
                 dot_quote(space.label(to));
          const std::string degree =
              graph.degree ? graph.degree(from, to) : std::string();
          if (!degree.empty()) out += " [label=" + dot_quote(degree) + "]";
          out += ";\n";
        }
      }
      out += "}\n";
    }
    return out;
  }

  out += "digraph " + dot_quote("model") + " {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=circle];\n";
  for (int s = 0; s < space.size(); ++s) {
    std::string blind_for;
    for (const PlayerGraph& graph : graphs) {
      if (blindspots(graph.info).contains(s)) {
        if (!blind_for.empty()) blind_for += ",";
        blind_for += graph.id;
      }
    }
    node_line(s, blind_for.empty()
                     ? ""
                     : "style=dashed, xlabel=" + dot_quote("blindspot:" +
                                                        blind_for));
  }
  for (const PlayerGraph& graph : graphs) {
    for (int from = 0; from < space.size(); ++from) {
      const Event& succ = graph.info.set(from);
      for (int to = succ.first(); to >= 0; to = succ.next(to)) {
        std::string label = graph.id;
        const std::string degree =
            graph.degree ? graph.degree(from, to) : std::string();
        if (!degree.empty()) label += ":" + degree;
        out += "  " + dot_quote(space.label(from)) + " -> " +
               dot_quote(space.label(to)) + " [label=" + dot_quote(label) + "];\n";
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string export_dot(const ModelFile& model, const DotOptions& options) {
  std::vector<PlayerGraph> graphs;
  for (size_t i = 0; i < model.players.size(); ++i) {
    if (options.player && *options.player != model.players[i]) continue;
    graphs.push_back(PlayerGraph{model.players[i], model.structures[i], {}});
  }
  if (graphs.empty()) {
    throw ValidationError("dot", "no matching player");
  }
  return render(*model.space, graphs, options);
}

std::string export_dot(const ExtensionSpace& ext, const DotOptions& options) {
  std::vector<PlayerGraph> graphs;
  for (int i = 0; i < ext.game().player_count(); ++i) {
    if (options.player && *options.player != ext.game().player(i)) continue;
    PlayerGraph graph{ext.game().player(i),
                      info_from_relation(relation_from_types(ext, i)),
                      {}};
    if (options.degrees) {
      graph.degree = [&ext, i](int from, int to) {
        return format_rational(accessibility_degree(ext, i, from, to));
      };
    }
    graphs.push_back(std::move(graph));
  }
  if (graphs.empty()) {
    throw ValidationError("dot", "no matching player");
  }
  return render(*ext.space(), graphs, options);
}

}  // namespace doxa
