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

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "doxa/beliefs.hpp"
#include "doxa/decisions.hpp"
#include "doxa/dot.hpp"
#include "doxa/errors.hpp"
#include "doxa/frames.hpp"
#include "doxa/games.hpp"
#include "doxa/group.hpp"
#include "doxa/model_io.hpp"
#include "doxa/rng.hpp"
#include "doxa/search.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace doxa;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int default_max_states() {
  if (const char* env = std::getenv("DOXA_MAX_STATES")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw ValidationError("DOXA_MAX_STATES", "not an integer");
    }
  }
  return kDefaultMaxStates;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

// Players selected by --player, or all of them.
std::vector<int> selected_players(const ModelFile& model,
                                  const std::optional<std::string>& player) {
  std::vector<int> out;
  for (size_t i = 0; i < model.players.size(); ++i) {
    if (!player || *player == model.players[i]) {
      out.push_back(static_cast<int>(i));
    }
  }
  if (out.empty()) throw ValidationError("--player", "unknown player id");
  return out;
}

int require_state(const ModelFile& model, const std::string& label) {
  return model.space->require(label);
}

Json report_to_json(const TheoremReport& report) {
  Json checks = Json::array();
  for (const auto& check : report.checks()) {
    Json row = Json::object();
    row["name"] = check.name;
    row["applicable"] = check.applicable;
    row["passed"] = check.passed;
    if (!check.detail.empty()) row["detail"] = check.detail;
    checks.push_back(std::move(row));
  }
  return checks;
}

void print_report(const TheoremReport& report) {
  for (const auto& check : report.checks()) {
    std::cout << check.name << ": ";
    if (!check.applicable) {
      std::cout << "not applicable (" << check.detail << ")";
    } else if (check.passed) {
      std::cout << "pass";
    } else {
      std::cout << "FAIL";
      if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
    }
    std::cout << "\n";
  }
}

struct CheckFrameCmd {
  std::string file;
  std::optional<std::string> player;
  bool json = false;

  int run() const {
    const ModelFile model = parse_model(read_file(file));
    bool all_ok = true;
    Json out = Json::array();
    for (int i : selected_players(model, player)) {
      const Relation rel = relation_from_info(model.structures[i]);
      const RelationProperties rp = check_relation_properties(rel);
      const StructureProperties sp =
          check_structure_properties(model.structures[i]);
      const TheoremReport theorems = verify_frame_theorems(rel);
      all_ok = all_ok && theorems.all_passed();

      if (json) {
        Json entry = Json::object();
        entry["player"] = model.players[i];
        entry["serial"] = rp.serial;
        entry["transitive"] = rp.transitive;
        entry["euclidean"] = rp.euclidean;
        entry["viable"] = sp.viable;
        entry["inclusive"] = sp.inclusive;
        entry["mutual"] = sp.mutual;
        entry["divisible"] = sp.divisible;
        entry["partitional"] = sp.partitional;
        entry["theorems"] = report_to_json(theorems);
        out.push_back(std::move(entry));
        continue;
      }

      const StateSpace& space = *model.space;
      std::cout << "player " << model.players[i] << "\n";
      auto flag = [&](const char* name, bool value,
                      const std::string& witness) {
        std::cout << "  " << name << ": " << yesno(value);
        if (!value && !witness.empty()) {
          std::cout << " (witness " << witness << ")";
        }
        std::cout << "\n";
      };
      flag("serial", rp.serial,
           rp.serial_witness ? space.label(*rp.serial_witness) : "");
      flag("transitive", rp.transitive,
           rp.transitive_witness
               ? space.label((*rp.transitive_witness)[0]) + "," +
                     space.label((*rp.transitive_witness)[1]) + "," +
                     space.label((*rp.transitive_witness)[2])
               : "");
      flag("euclidean", rp.euclidean,
           rp.euclidean_witness
               ? space.label((*rp.euclidean_witness)[0]) + "," +
                     space.label((*rp.euclidean_witness)[1]) + "," +
                     space.label((*rp.euclidean_witness)[2])
               : "");
      flag("viable", sp.viable,
           sp.viable_witness ? space.label(*sp.viable_witness) : "");
      flag("inclusive", sp.inclusive,
           sp.inclusive_witness
               ? space.label((*sp.inclusive_witness)[0]) + "," +
                     space.label((*sp.inclusive_witness)[1])
               : "");
      flag("mutual", sp.mutual,
           sp.mutual_witness
               ? space.label((*sp.mutual_witness)[0]) + "," +
                     space.label((*sp.mutual_witness)[1]) + "," +
                     space.label((*sp.mutual_witness)[2])
               : "");
      flag("divisible", sp.divisible, "");
      flag("partitional", sp.partitional, "");
      std::cout << "  theorems: "
                << (theorems.all_passed() ? "all pass" : "FAILED") << "\n";
    }
    if (json) std::cout << out.dump(2) << "\n";
    return all_ok ? kExitPass : kExitCheckFailed;
  }
};

struct ConvertCmd {
  std::string file;

  int run() const {
    ModelFile model = parse_model(read_file(file));
    for (size_t i = 0; i < model.given_as_relation.size(); ++i) {
      model.given_as_relation[i] = !model.given_as_relation[i];
    }
    std::cout << serialize_model(model);
    return kExitPass;
  }
};

struct BlindspotsCmd {
  std::string file;
  std::optional<std::string> player;
  bool json = false;

  int run() const {
    const ModelFile model = parse_model(read_file(file));
    Json out = Json::object();
    for (int i : selected_players(model, player)) {
      const Event blind = blindspots(model.structures[i]);
      if (json) {
        Json labels = Json::array();
        for (int s = blind.first(); s >= 0; s = blind.next(s)) {
          labels.push_back(model.space->label(s));
        }
        out[model.players[i]] = std::move(labels);
      } else {
        for (int s = blind.first(); s >= 0; s = blind.next(s)) {
          std::cout << model.space->label(s) << "\n";
        }
      }
    }
    if (json) std::cout << out.dump(2) << "\n";
    return kExitPass;
  }
};

struct GroupInfoCmd {
  std::string file;
  std::string at;
  bool json = false;

  int run() const {
    const ModelFile model = parse_model(read_file(file));
    const Event reachable =
        group_info(model.profile(), require_state(model, at));
    if (json) {
      Json labels = Json::array();
      for (int s = reachable.first(); s >= 0; s = reachable.next(s)) {
        labels.push_back(model.space->label(s));
      }
      std::cout << labels.dump(2) << "\n";
    } else {
      for (int s = reachable.first(); s >= 0; s = reachable.next(s)) {
        std::cout << model.space->label(s) << "\n";
      }
    }
    return kExitPass;
  }
};

struct CommonInfoCmd {
  std::string file;
  std::vector<std::string> event;
  std::string at;
  bool json = false;

  int run() const {
    const ModelFile model = parse_model(read_file(file));
    Event e = Event::none(model.space->size());
    for (const std::string& label : event) {
      e.insert(require_state(model, label));
    }
    const bool common =
        is_common_information(model.profile(), e, require_state(model, at));
    if (json) {
      Json out = Json::object();
      out["common"] = common;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << yesno(common) << "\n";
    }
    return common ? kExitPass : kExitCheckFailed;
  }
};

struct GstpCmd {
  std::string file;
  std::optional<std::string> player;
  bool json = false;

  int run() const {
    const ModelFile model = parse_model(read_file(file));
    if (!model.decision) {
      throw ValidationError("decision", "model has no decision function");
    }
    bool all_pass = true;
    Json out = Json::array();
    for (int i : selected_players(model, player)) {
      const GstpResult result =
          satisfies_gstp(*model.decision, model.structures[i]);
      all_pass = all_pass && result.passed();
      if (json) {
        Json entry = Json::object();
        entry["player"] = model.players[i];
        entry["mode"] = to_string(result.mode);
        entry["passed"] = result.passed();
        if (result.counterexample) {
          Json labels = Json::array();
          const Event& s = result.counterexample->subset;
          for (int w = s.first(); w >= 0; w = s.next(w)) {
            labels.push_back(model.space->label(w));
          }
          entry["subset"] = std::move(labels);
          entry["decision"] = result.counterexample->decision.to_string();
        }
        out.push_back(std::move(entry));
        continue;
      }
      std::cout << "player " << model.players[i] << ": ";
      if (result.passed()) {
        std::cout << "pass";
      } else {
        std::cout << "counterexample S="
                  << result.counterexample->subset.to_string(*model.space)
                  << " d=" << result.counterexample->decision.to_string();
      }
      std::cout << " (" << to_string(result.mode) << ")\n";
    }
    if (json) std::cout << out.dump(2) << "\n";
    return all_pass ? kExitPass : kExitCheckFailed;
  }
};

struct AgreeCmd {
  std::string file;
  std::optional<std::string> at;
  bool json = false;

  int run() const {
    const ModelFile model = parse_model(read_file(file));
    if (!model.decision) {
      throw ValidationError("decision", "model has no decision function");
    }
    int actual = -1;
    if (at) {
      actual = require_state(model, *at);
    } else if (model.actual) {
      actual = *model.actual;
    } else {
      throw ValidationError("--at", "no actual state given");
    }

    const Profile profile = model.profile();
    const AgreementResult result =
        agreement_check(profile, *model.decision, actual);

    if (json) {
      Json out = Json::object();
      Json decisions = Json::object();
      for (size_t i = 0; i < model.players.size(); ++i) {
        decisions[model.players[i]] = result.decisions[i].to_string();
      }
      out["decisions"] = std::move(decisions);
      Json hypotheses = Json::object();
      bool divisible = true;
      for (bool d : result.divisible) divisible = divisible && d;
      bool gstp = true;
      for (const auto& g : result.gstp) gstp = gstp && g.passed();
      hypotheses["divisible"] = divisible;
      hypotheses["equal-blindspots"] = result.equal_blindspots;
      hypotheses["gstp"] = gstp;
      hypotheses["common-information"] = result.common_information;
      out["hypotheses"] = std::move(hypotheses);
      out["decisions-equal"] = result.decisions_equal();
      std::cout << out.dump(2) << "\n";
    } else {
      for (size_t i = 0; i < model.players.size(); ++i) {
        std::cout << "player " << model.players[i] << ": d = "
                  << result.decisions[i].to_string() << "\n";
      }
      auto hypothesis = [&](const char* name, bool ok,
                            const std::string& witness) {
        std::cout << "hypothesis " << name << ": "
                  << (ok ? "ok" : "violated");
        if (!ok && !witness.empty()) std::cout << " (" << witness << ")";
        std::cout << "\n";
      };
      bool divisible = true;
      for (bool d : result.divisible) divisible = divisible && d;
      hypothesis("divisible", divisible,
                 result.divisible_failure_player
                     ? "player " +
                           model.players[*result.divisible_failure_player]
                     : "");
      hypothesis("equal-blindspots", result.equal_blindspots,
                 result.blindspot_witness
                     ? "players " +
                           model.players[result.blindspot_witness->first] +
                           ", " +
                           model.players[result.blindspot_witness->second]
                     : "");
      bool gstp = true;
      for (const auto& g : result.gstp) gstp = gstp && g.passed();
      hypothesis("gstp", gstp,
                 result.gstp_failure_player
                     ? "player " + model.players[*result.gstp_failure_player]
                     : "");
      hypothesis(
          "common-information", result.common_information,
          result.common_information_witness
              ? "player " +
                    model.players[result.common_information_witness->first] +
                    " at " +
                    model.space->label(
                        result.common_information_witness->second)
              : "");
      std::cout << "conclusion decisions-equal: "
                << yesno(result.decisions_equal()) << "\n";
    }
    const bool ok = result.hypotheses_hold() && result.decisions_equal();
    return ok ? kExitPass : kExitCheckFailed;
  }
};

struct AxiomsCmd {
  std::string file;
  std::optional<std::string> player;
  bool json = false;

  int run() const {
    const ModelFile model = parse_model(read_file(file));
    bool correspondence_ok = true;
    Json out = Json::array();
    for (int i : selected_players(model, player)) {
      const AxiomReport report = audit_axioms(model.structures[i]);
      const TheoremReport correspondence =
          check_axiom_correspondence(model.structures[i]);
      correspondence_ok =
          correspondence_ok && correspondence.all_applicable_and_passed();

      if (json) {
        Json entry = Json::object();
        entry["player"] = model.players[i];
        entry["mode"] = to_string(report.mode);
        entry["N"] = report.axiom_n;
        entry["K"] = report.axiom_k;
        entry["D"] = report.axiom_d;
        entry["4"] = report.axiom_4;
        entry["5"] = report.axiom_5;
        entry["kd45"] = report.kd45();
        entry["correspondence"] = report_to_json(correspondence);
        out.push_back(std::move(entry));
        continue;
      }

      std::cout << "player " << model.players[i] << "\n";
      std::cout << "  mode: " << to_string(report.mode) << "\n";
      auto axiom = [&](const char* name, bool value,
                       const std::optional<Event>& witness) {
        std::cout << "  " << name << ": " << yesno(value);
        if (!value && witness) {
          std::cout << " (witness " << witness->to_string(*model.space) << ")";
        }
        std::cout << "\n";
      };
      axiom("N", report.axiom_n, std::nullopt);
      axiom("K", report.axiom_k,
            report.k_witness
                ? std::optional<Event>(report.k_witness->first)
                : std::nullopt);
      axiom("D", report.axiom_d, report.d_witness);
      axiom("4", report.axiom_4, report.four_witness);
      axiom("5", report.axiom_5, report.five_witness);
      std::cout << "  KD45: " << yesno(report.kd45()) << "\n";
      std::cout << "  correspondence: "
                << (correspondence.all_applicable_and_passed() ? "ok"
                                                               : "FAILED")
                << "\n";
    }
    if (json) std::cout << out.dump(2) << "\n";
    return correspondence_ok ? kExitPass : kExitCheckFailed;
  }
};

struct CredalCheckCmd {
  std::string file;
  bool json = false;

  int run() const {
    const ModelFile model = parse_model(read_file(file));
    bool all_pass = true;
    Json out = Json::array();
    for (size_t i = 0; i < model.players.size(); ++i) {
      std::string text;
      bool pass = true;
      if (!model.credal[i]) {
        text = "no credal set";
      } else {
        const auto violation =
            check_b1(*model.credal[i], model.structures[i]);
        if (violation) {
          pass = false;
          all_pass = false;
          text = "violation at " + model.space->label(violation->state) +
                 (violation->direction ==
                          B1Direction::kBlindspotWithPositiveMass
                      ? " (blindspot with positive mass)"
                      : " (accessible state with all-zero mass)");
        } else {
          text = "pass";
        }
      }
      if (json) {
        Json entry = Json::object();
        entry["player"] = model.players[i];
        entry["result"] = text;
        entry["passed"] = pass;
        out.push_back(std::move(entry));
      } else {
        std::cout << "player " << model.players[i] << ": " << text << "\n";
      }
    }
    if (json) std::cout << out.dump(2) << "\n";
    return all_pass ? kExitPass : kExitCheckFailed;
  }
};

struct ExtendCmd {
  std::string file;
  std::string output;
  int max_states = 0;

  int run() const {
    const GameFile game = parse_game(read_file(file), max_states);
    const ModelFile model = extension_to_model(game.ext, game.credal);
    const std::string text = serialize_model(model);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) throw ValidationError(output, "cannot open for writing");
      out << text;
    }
    return kExitPass;
  }
};

struct Kd45Cmd {
  std::string file;
  bool json = false;
  bool c1_per_type = false;
  int max_states = 0;

  int run() const {
    const GameFile game = parse_game(read_file(file), max_states);
    C1Options c1;
    c1.one_measure_per_type = c1_per_type;
    const TheoremReport report =
        verify_extension_theorem(game.ext, game.credal, AuditOptions{}, c1);
    if (json) {
      std::cout << report_to_json(report).dump(2) << "\n";
    } else {
      print_report(report);
    }
    return report.all_applicable_and_passed() ? kExitPass : kExitCheckFailed;
  }
};

struct DegreeCmd {
  std::string file;
  std::string player;
  std::string from;
  std::string to;
  int max_states = 0;

  int run() const {
    const GameFile game = parse_game(read_file(file), max_states);
    const auto index = game.ext.game().player_index(player);
    if (!index) throw ValidationError("--player", "unknown player id");
    const Rational degree = accessibility_degree(
        game.ext, *index, game.ext.space()->require(from),
        game.ext.space()->require(to));
    std::cout << format_rational(degree) << "\n";
    return kExitPass;
  }
};

struct EnumerateCmd {
  int n = 2;
  bool divisible_only = false;
  bool list = false;

  int run() const {
    RelationEnumerator relations(n);
    std::uint64_t count = 0;
    std::uint64_t index = 0;
    while (auto rel = relations.next()) {
      const std::uint64_t mask = index++;
      if (divisible_only &&
          !check_structure_properties(info_from_relation(*rel)).divisible) {
        continue;
      }
      ++count;
      if (list) {
        std::cout << mask << ":";
        for (auto [from, to] : rel->pairs()) {
          std::cout << " (" << rel->space()->label(from) << ","
                    << rel->space()->label(to) << ")";
        }
        std::cout << "\n";
      }
    }
    std::cout << "count: " << count << "\n";
    return kExitPass;
  }
};

struct SearchCmd {
  int n = 3;
  bool no_builtin = false;
  bool equal_blindspots = false;
  std::uint64_t budget = 2000000;

  int run() const {
    CounterexampleConfig config;
    config.n = n;
    config.include_builtin = !no_builtin;
    config.require_equal_blindspots = equal_blindspots;
    config.budget = budget;

    std::cout << "generator: " << SplitMix64::kName << "\n";
    const CounterexampleSearchResult result =
        search_agreement_counterexample(config);
    std::cout << "candidates: " << result.candidates_examined << "\n";
    if (!result.instance) {
      std::cout << "found: no\n";
      return kExitPass;
    }
    std::cout << "found: yes\n";

    const AgreementInstance& instance = *result.instance;
    ModelFile model;
    model.space = instance.profile.space();
    model.players = instance.profile.players();
    for (int i = 0; i < instance.profile.player_count(); ++i) {
      model.structures.push_back(instance.profile.structure(i));
      model.given_as_relation.push_back(true);
    }
    model.credal.resize(model.players.size());
    model.decision = instance.decision;
    model.actual = instance.actual_state;
    std::cout << serialize_model(model);

    const AgreementResult check = agreement_check(
        instance.profile, instance.decision, instance.actual_state);
    for (size_t i = 0; i < model.players.size(); ++i) {
      std::cout << "player " << model.players[i] << ": d = "
                << check.decisions[i].to_string() << "\n";
    }
    return kExitCheckFailed;  // counterexample found
  }
};

struct DotCmd {
  std::string file;
  bool merged = false;
  bool degrees = false;
  std::optional<std::string> player;
  int max_states = 0;

  int run() const {
    const std::string text = read_file(file);
    DotOptions options;
    options.merged = merged;
    options.degrees = degrees;
    options.player = player;

    const Json probe = [&] {
      try {
        return Json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
      }
    }();
    if (probe.is_object() && probe.contains("actions")) {
      const GameFile game = parse_game(text, max_states);
      std::cout << export_dot(game.ext, options);
    } else {
      if (degrees) {
        throw ValidationError("--degrees",
                              "degree labels need a game file");
      }
      std::cout << export_dot(parse_model(text), options);
    }
    return kExitPass;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"doxa: exact verification of finite belief structures"};
  app.require_subcommand(1);
  const int max_states = [] {
    try {
      return default_max_states();
    } catch (const Error&) {
      return kDefaultMaxStates;
    }
  }();

  CheckFrameCmd check_frame;
  auto* check_frame_cmd = app.add_subcommand(
      "check-frame", "Property report and frame theorems per player");
  check_frame_cmd->add_option("model", check_frame.file)->required();
  std::string check_frame_player;
  check_frame_cmd->add_option("--player", check_frame_player);
  check_frame_cmd->add_flag("--json", check_frame.json);

  ConvertCmd convert;
  auto* convert_cmd = app.add_subcommand(
      "convert", "Swap relation and info-map presentations");
  convert_cmd->add_option("model", convert.file)->required();

  BlindspotsCmd blindspots_args;
  auto* blindspots_cmd =
      app.add_subcommand("blindspots", "Print blindspot states");
  blindspots_cmd->add_option("model", blindspots_args.file)->required();
  std::string blindspots_player;
  blindspots_cmd->add_option("--player", blindspots_player);
  blindspots_cmd->add_flag("--json", blindspots_args.json);

  GroupInfoCmd group_info_args;
  auto* group_info_cmd =
      app.add_subcommand("group-info", "Group information set of a state");
  group_info_cmd->add_option("model", group_info_args.file)->required();
  group_info_cmd->add_option("--at", group_info_args.at)->required();
  group_info_cmd->add_flag("--json", group_info_args.json);

  CommonInfoCmd common_info;
  auto* common_info_cmd = app.add_subcommand(
      "common-info", "Is the event common information at a state?");
  common_info_cmd->add_option("model", common_info.file)->required();
  common_info_cmd->add_option("--event", common_info.event)
      ->required()
      ->delimiter(',');
  common_info_cmd->add_option("--at", common_info.at)->required();
  common_info_cmd->add_flag("--json", common_info.json);

  GstpCmd gstp;
  auto* gstp_cmd = app.add_subcommand(
      "gstp", "Check the generalized sure-thing principle");
  gstp_cmd->add_option("model", gstp.file)->required();
  std::string gstp_player;
  gstp_cmd->add_option("--player", gstp_player);
  gstp_cmd->add_flag("--json", gstp.json);

  AgreeCmd agree;
  auto* agree_cmd =
      app.add_subcommand("agree", "Agreement-theorem check at a state");
  agree_cmd->add_option("model", agree.file)->required();
  std::string agree_at;
  agree_cmd->add_option("--at", agree_at);
  agree_cmd->add_flag("--json", agree.json);

  AxiomsCmd axioms;
  auto* axioms_cmd = app.add_subcommand(
      "axioms", "Belief-axiom audit with the correspondence cross-check");
  axioms_cmd->add_option("model", axioms.file)->required();
  std::string axioms_player;
  axioms_cmd->add_option("--player", axioms_player);
  axioms_cmd->add_flag("--json", axioms.json);

  CredalCheckCmd credal_check;
  auto* credal_check_cmd = app.add_subcommand(
      "credal-check", "Blindspot/zero-mass consistency per player");
  credal_check_cmd->add_option("model", credal_check.file)->required();
  credal_check_cmd->add_flag("--json", credal_check.json);

  ExtendCmd extend;
  auto* extend_cmd = app.add_subcommand(
      "extend", "Write the induced extension as a model file");
  extend_cmd->add_option("game", extend.file)->required();
  extend_cmd->add_option("-o,--output", extend.output);

  Kd45Cmd kd45;
  auto* kd45_cmd = app.add_subcommand(
      "kd45", "Verify the extension theorem and KD45 audits");
  kd45_cmd->add_option("game", kd45.file)->required();
  kd45_cmd->add_flag("--json", kd45.json);
  kd45_cmd->add_flag("--c1-per-type", kd45.c1_per_type,
                     "One measure must serve all profiles of a type");

  DegreeCmd degree;
  auto* degree_cmd =
      app.add_subcommand("degree", "Accessibility degree between two states");
  degree_cmd->add_option("game", degree.file)->required();
  degree_cmd->add_option("--player", degree.player)->required();
  degree_cmd->add_option("--from", degree.from)->required();
  degree_cmd->add_option("--to", degree.to)->required();

  EnumerateCmd enumerate;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "Enumerate all relations of a size");
  enumerate_cmd->add_option("--n", enumerate.n)->required();
  enumerate_cmd->add_flag("--divisible", enumerate.divisible_only);
  enumerate_cmd->add_flag("--list", enumerate.list);

  SearchCmd search;
  auto* search_cmd = app.add_subcommand(
      "search-counterexample", "Search for an agreement counterexample");
  search_cmd->add_option("--n", search.n);
  search_cmd->add_flag("--no-builtin", search.no_builtin);
  search_cmd->add_flag("--equal-blindspots", search.equal_blindspots);
  search_cmd->add_option("--budget", search.budget);

  DotCmd dot;
  auto* dot_cmd = app.add_subcommand("dot", "Export DOT graphs");
  dot_cmd->add_option("file", dot.file)->required();
  dot_cmd->add_flag("--merged", dot.merged);
  dot_cmd->add_flag("--degrees", dot.degrees);
  std::string dot_player;
  dot_cmd->add_option("--player", dot_player);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*check_frame_cmd) {
      if (!check_frame_player.empty()) check_frame.player = check_frame_player;
      return check_frame.run();
    }
    if (*convert_cmd) return convert.run();
    if (*blindspots_cmd) {
      if (!blindspots_player.empty()) blindspots_args.player = blindspots_player;
      return blindspots_args.run();
    }
    if (*group_info_cmd) return group_info_args.run();
    if (*common_info_cmd) return common_info.run();
    if (*gstp_cmd) {
      if (!gstp_player.empty()) gstp.player = gstp_player;
      return gstp.run();
    }
    if (*agree_cmd) {
      if (!agree_at.empty()) agree.at = agree_at;
      return agree.run();
    }
    if (*axioms_cmd) {
      if (!axioms_player.empty()) axioms.player = axioms_player;
      return axioms.run();
    }
    if (*credal_check_cmd) return credal_check.run();
    if (*extend_cmd) {
      extend.max_states = max_states;
      return extend.run();
    }
    if (*kd45_cmd) {
      kd45.max_states = max_states;
      return kd45.run();
    }
    if (*degree_cmd) {
      degree.max_states = max_states;
      return degree.run();
    }
    if (*enumerate_cmd) return enumerate.run();
    if (*search_cmd) return search.run();
    if (*dot_cmd) {
      if (!dot_player.empty()) dot.player = dot_player;
      dot.max_states = max_states;
      return dot.run();
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
