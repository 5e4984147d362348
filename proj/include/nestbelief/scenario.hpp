// Copyright 2026 The nestbelief Authors
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

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "nestbelief/belief_store.hpp"
#include "nestbelief/planner.hpp"
#include "nestbelief/speech_acts.hpp"

namespace nestbelief {

/// `Owner > A > B`: the first name selects the store, the rest are belief hops.
struct Path {
  std::string owner;
  Viewpoint viewpoint;
};

namespace cmd {

struct DeclareAgent {
  std::string name;
};
struct Assert {
  Path path;
  AttitudeType attitude;
  Formula formula;
};
struct Retract {
  Path path;
  AttitudeType attitude;
  Formula formula;
};
struct Topic {
  Path path;
  AttitudeType attitude;
  std::string label;
};
struct Stereotype {
  std::string name;
  std::optional<std::string> store;
  std::set<StereotypeMember> members;
};
struct Trust {
  Path path;
  std::string agent;
};
enum class AscribeKind { Default, Stereotype, Accept, Demand };
struct Ascribe {
  AscribeKind kind;
  Path path;
  std::string agent;
  std::optional<Formula> formula;
};
enum class Side { Speaker, Hearer, Both };
/// Without `at`, the speaker's and the hearer's own stores are updated.
/// With `at Owner > ...`, both rules run inside that one store, relative to
/// the given viewpoint.
struct Perform {
  Side side;
  ActInstance act;
  std::optional<Path> at;
};
struct Simulate {
  Path path;
  std::vector<Formula> goals;
};
struct Recognize {
  Path path;
  Term observed;
};
struct Show {
  std::optional<Path> path;
  std::optional<RenderFormat> format;
};
struct Expect {
  Path path;
  AttitudeType attitude;
  Formula formula;
  Status expected;
};
struct LoadLibrary {
  std::string path;
};
struct DefineAct {
  ActSchema schema;
};
struct DefineOperator {
  Operator op;
};
struct ResetActs {
  bool builtin;
};

}  // namespace cmd

struct ScenarioCommand {
  int line = 0;
  std::variant<cmd::DeclareAgent, cmd::Assert, cmd::Retract, cmd::Topic, cmd::Stereotype,
               cmd::Trust, cmd::Ascribe, cmd::Perform, cmd::Simulate, cmd::Recognize, cmd::Show,
               cmd::Expect, cmd::LoadLibrary, cmd::DefineAct, cmd::DefineOperator, cmd::ResetActs>
      body;
};

/// Parses a whole scenario. Throws ParseError at the first token that does
/// not fit the grammar.
std::vector<ScenarioCommand> parse_scenario(std::string_view text);

struct RunConfig {
  std::size_t max_depth = BeliefStore::kDefaultMaxDepth;
  PlanLimits limits{8, 200000};
  std::vector<std::string> libraries;
  RenderFormat show_format = RenderFormat::Ascii;
  /// Relative `library` paths resolve against this directory.
  std::filesystem::path base_dir = ".";
};

inline constexpr int kTraceSchemaVersion = 1;

struct TraceEvent {
  int line = 0;
  std::string kind;
  /// ok, pass, fail, error, warning, blocked, limit
  std::string status;
  std::string text;
  nlohmann::ordered_json data;
};

class Trace {
 public:
  void add(TraceEvent e) { events_.push_back(std::move(e)); }
  const std::vector<TraceEvent>& events() const { return events_; }
  std::string to_json() const;
  std::string to_text() const;

 private:
  std::vector<TraceEvent> events_;
};

enum ExitStatus : int {
  kExitOk = 0,
  kExitExpectationFailed = 1,
  kExitParseOrIo = 2,
  kExitLimitExceeded = 3,
};

/// Executes scenario commands against one store per declared agent plus the
/// System store. Per-command errors are recorded and execution continues;
/// only library IO and parse errors stop the run.
class ScenarioRunner {
 public:
  explicit ScenarioRunner(RunConfig config = {});

  void execute(const ScenarioCommand& command);
  /// Parses and executes `text`; ParseError propagates.
  void execute_text(std::string_view text);

  const Trace& trace() const { return trace_; }
  int exit_status() const;
  const std::map<std::string, BeliefStore>& stores() const { return stores_; }
  const BeliefStore& store(const std::string& agent) const;
  const std::vector<Operator>& operators() const { return operators_; }
  const ActLibrary& acts() const { return acts_; }
  bool fatal() const { return fatal_; }

 private:
  BeliefStore& store_for(const std::string& agent);
  void load_library(const std::string& path, int line);
  void execute_ascribe(int line, const cmd::Ascribe& c);
  void execute_perform(int line, const cmd::Perform& c);
  void execute_simulate(int line, const cmd::Simulate& c);
  void execute_recognize(int line, const cmd::Recognize& c);
  void set_acts(ActLibrary acts);
  void record(int line, std::string kind, std::string status, std::string text,
              nlohmann::ordered_json data = nlohmann::ordered_json::object());

  RunConfig config_;
  std::map<std::string, BeliefStore> stores_;
  ActLibrary acts_;
  std::vector<Operator> operators_;
  Trace trace_;
  bool failed_ = false;
  bool limit_ = false;
  bool fatal_ = false;
};

struct RunResult {
  std::map<std::string, BeliefStore> stores;
  Trace trace;
  int exit_status = kExitOk;
};

RunResult run(const std::vector<ScenarioCommand>& commands, const RunConfig& config = {});

/// Scenario text that rebuilds the store.
std::string save_store(const BeliefStore& store);
/// Rebuilds a store from `save_store` output. Throws ParseError, or Error for
/// commands that do not describe a single store.
BeliefStore load_store(std::string_view text,
                       std::size_t max_depth = BeliefStore::kDefaultMaxDepth);

}  // namespace nestbelief
