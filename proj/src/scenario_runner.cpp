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

#include <fstream>
#include <sstream>

#include "nestbelief/ascription.hpp"
#include "nestbelief/errors.hpp"
#include "nestbelief/scenario.hpp"
#include "nestbelief/simulation.hpp"

namespace nestbelief {
namespace {

using nlohmann::ordered_json;

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

std::string g(const Formula& f) { return to_string(f, Syntax::Ground); }
std::string g(const Term& t) { return to_string(t, Syntax::Ground); }

std::string path_text(const Path& p) { return to_string(p.viewpoint, p.owner); }

ordered_json outcome_json(const AscriptionOutcome& o) {
  ordered_json j;
  j["result"] = std::string(to_string(o.result));
  if (o.blocking_evidence) j["evidence"] = g(*o.blocking_evidence);
  return j;
}

std::string outcome_text(const AscriptionOutcome& o) {
  std::string s(to_string(o.result));
  if (o.blocking_evidence) s += " by " + g(*o.blocking_evidence);
  return s;
}

ordered_json plan_json(const Plan& p) {
  ordered_json steps = ordered_json::array();
  for (StepId id : p.linearization()) {
    if (id == kStartStep || id == kFinishStep) continue;
    steps.push_back({{"step", g(p.instance(id))}, {"mental", p.steps[id].op.mental}});
  }
  return steps;
}

std::string plan_text(const Plan& p) {
  std::string s;
  for (StepId id : p.linearization()) {
    if (id == kStartStep || id == kFinishStep) continue;
    if (!s.empty()) s += ", ";
    s += g(p.instance(id));
  }
  return "[" + s + "]";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

std::string Trace::to_json() const {
  ordered_json j;
  j["schema_version"] = kTraceSchemaVersion;
  j["events"] = ordered_json::array();
  for (const TraceEvent& e : events_) {
    ordered_json ev;
    ev["line"] = e.line;
    ev["kind"] = e.kind;
    ev["status"] = e.status;
    ev["text"] = e.text;
    if (!e.data.empty()) ev["data"] = e.data;
    j["events"].push_back(std::move(ev));
  }
  return j.dump(2) + "\n";
}

std::string Trace::to_text() const {
  std::string out;
  for (const TraceEvent& e : events_) {
    if (e.kind == "show") {
      out += e.text;
      if (!e.text.empty() && e.text.back() != '\n') out += '\n';
      continue;
    }
    out += "line " + std::to_string(e.line) + ": " + e.kind + " " + e.status;
    if (!e.text.empty()) out += ": " + e.text;
    out += '\n';
  }
  return out;
}

ScenarioRunner::ScenarioRunner(RunConfig config)
    : config_(std::move(config)), acts_(ActLibrary::builtin()) {
  stores_.emplace("System", BeliefStore("System", config_.max_depth));
  for (const std::string& lib : config_.libraries) {
    load_library(lib, 0);
    if (fatal_) break;
  }
}

int ScenarioRunner::exit_status() const {
  if (fatal_) return kExitParseOrIo;
  if (limit_) return kExitLimitExceeded;
  if (failed_) return kExitExpectationFailed;
  return kExitOk;
}

const BeliefStore& ScenarioRunner::store(const std::string& agent) const {
  auto it = stores_.find(agent);
  if (it == stores_.end()) throw Error("unknown agent " + agent + " (declare it with `agent`)");
  return it->second;
}

BeliefStore& ScenarioRunner::store_for(const std::string& agent) {
  auto it = stores_.find(agent);
  if (it == stores_.end()) throw Error("unknown agent " + agent + " (declare it with `agent`)");
  return it->second;
}

void ScenarioRunner::record(int line, std::string kind, std::string status, std::string text,
                            ordered_json data) {
  trace_.add(TraceEvent{line, std::move(kind), std::move(status), std::move(text), std::move(data)});
}

void ScenarioRunner::set_acts(ActLibrary acts) {
  acts_ = std::move(acts);
  for (auto& [name, s] : stores_) s = s.with_acts(acts_);
}

void ScenarioRunner::load_library(const std::string& path, int line) {
  std::filesystem::path p(path);
  if (p.is_relative()) p = config_.base_dir / p;
  std::vector<ScenarioCommand> commands;
  try {
    commands = parse_scenario(read_file(p));
  } catch (const ParseError& e) {
    fatal_ = true;
    record(line, "library", "error", p.string() + ": " + e.what());
    return;
  } catch (const std::exception& e) {
    fatal_ = true;
    record(line, "library", "error", e.what());
    return;
  }
  std::size_t acts = 0;
  std::size_t ops = 0;
  for (const ScenarioCommand& c : commands) {
    const bool allowed = std::holds_alternative<cmd::DefineAct>(c.body) ||
                         std::holds_alternative<cmd::DefineOperator>(c.body) ||
                         std::holds_alternative<cmd::ResetActs>(c.body);
    if (!allowed) {
      fatal_ = true;
      record(line, "library", "error",
             p.string() + ":" + std::to_string(c.line) + ": only act and operator definitions "
                                                         "are allowed in a library");
      return;
    }
    acts += std::holds_alternative<cmd::DefineAct>(c.body);
    ops += std::holds_alternative<cmd::DefineOperator>(c.body);
    execute(c);
    if (fatal_) return;
  }
  record(line, "library", "ok",
         p.string() + " (" + std::to_string(acts) + " acts, " + std::to_string(ops) + " operators)",
         {{"path", p.string()}, {"acts", acts}, {"operators", ops}});
}

void ScenarioRunner::execute_text(std::string_view text) {
  for (const ScenarioCommand& c : parse_scenario(text)) execute(c);
}

void ScenarioRunner::execute(const ScenarioCommand& command) {
  const int line = command.line;
  std::string kind = "command";
  try {
    std::visit(
        Overloaded{
            [&](const cmd::DeclareAgent& c) {
              kind = "agent";
              if (!stores_.contains(c.name)) {
                stores_.emplace(c.name, BeliefStore(c.name, config_.max_depth).with_acts(acts_));
              }
              record(line, kind, "ok", c.name, {{"agent", c.name}});
            },
            [&](const cmd::Assert& c) {
              kind = std::string(attitude_functor(c.attitude));
              BeliefStore& s = store_for(c.path.owner);
              s = assert_attitude(s, c.path.viewpoint, c.attitude, c.formula);
              record(line, kind, "ok", path_text(c.path) + ": " + g(c.formula),
                     {{"path", path_text(c.path)}, {"formula", g(c.formula)}});
            },
            [&](const cmd::Retract& c) {
              kind = "retract";
              BeliefStore& s = store_for(c.path.owner);
              s = retract_attitude(s, c.path.viewpoint, c.attitude, c.formula);
              record(line, kind, "ok",
                     std::string(to_string(c.attitude)) + " " + path_text(c.path) + ": " +
                         g(c.formula));
            },
            [&](const cmd::Topic& c) {
              kind = "topic";
              BeliefStore& s = store_for(c.path.owner);
              s.validate(c.path.viewpoint);
              s = s.with_topic(s.address(c.path.viewpoint, c.attitude), c.label);
              record(line, kind, "ok", path_text(c.path) + ": " + c.label);
            },
            [&](const cmd::Stereotype& c) {
              kind = "stereotype";
              BeliefStore& s = store_for(c.store.value_or("System"));
              s = s.with_stereotype(c.name, c.members);
              record(line, kind, "ok",
                     c.name + ": " + std::to_string(c.members.size()) + (c.members.size() == 1 ? " member" : " members"));
            },
            [&](const cmd::Trust& c) {
              kind = "trust";
              BeliefStore& s = store_for(c.path.owner);
              s = assert_trust(s, c.path.viewpoint, c.agent);
              record(line, kind, "ok", path_text(c.path) + ": " + c.agent);
            },
            [&](const cmd::Ascribe& c) { kind = "ascribe"; execute_ascribe(line, c); },
            [&](const cmd::Perform& c) { kind = "perform"; execute_perform(line, c); },
            [&](const cmd::Simulate& c) { kind = "simulate"; execute_simulate(line, c); },
            [&](const cmd::Recognize& c) { kind = "recognize"; execute_recognize(line, c); },
            [&](const cmd::Show& c) {
              kind = "show";
              const RenderFormat fmt = c.format.value_or(config_.show_format);
              std::string text;
              if (c.path) {
                const BeliefStore& s = store_for(c.path->owner);
                text = render(s, c.path->viewpoint, fmt);
              } else {
                for (const auto& [name, s] : stores_) text += render(s, fmt);
              }
              record(line, kind, "ok", text);
            },
            [&](const cmd::Expect& c) {
              kind = "expect";
              const Status got = holds(store_for(c.path.owner), c.path.viewpoint, c.attitude,
                                       c.formula);
              const bool pass = got == c.expected;
              if (!pass) failed_ = true;
              std::string text = path_text(c.path) + " " + std::string(to_string(c.attitude)) +
                                 " " + g(c.formula) + " is " + std::string(to_string(c.expected));
              if (!pass) text += " (got " + std::string(to_string(got)) + ")";
              record(line, kind, pass ? "pass" : "fail", text,
                     {{"expected", std::string(to_string(c.expected))},
                      {"actual", std::string(to_string(got))}});
            },
            [&](const cmd::LoadLibrary& c) {
              kind = "library";
              load_library(c.path, line);
            },
            [&](const cmd::DefineAct& c) {
              kind = "act";
              ActLibrary next = acts_;
              next.add(c.schema);
              resolve_preconditions(next, c.schema.name);
              set_acts(std::move(next));
              record(line, kind, "ok", c.schema.name);
            },
            [&](const cmd::DefineOperator& c) {
              kind = "operator";
              c.op.validate();
              bool replaced = false;
              for (Operator& op : operators_) {
                if (op.name == c.op.name) {
                  op = c.op;
                  replaced = true;
                }
              }
              if (!replaced) operators_.push_back(c.op);
              record(line, kind, "ok", format_operator(c.op));
            },
            [&](const cmd::ResetActs& c) {
              kind = "acts";
              set_acts(c.builtin ? ActLibrary::builtin() : ActLibrary{});
              record(line, kind, "ok", c.builtin ? "default" : "none");
            },
        },
        command.body);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    failed_ = true;
    record(line, kind, "error", e.what());
  }
}

void ScenarioRunner::execute_ascribe(int line, const cmd::Ascribe& c) {
  BeliefStore& s = store_for(c.path.owner);
  const Viewpoint& v = c.path.viewpoint;
  switch (c.kind) {
    case cmd::AscribeKind::Default: {
      Ascription a = default_ascribe(s, v, c.agent, *c.formula);
      s = std::move(a.store);
      record(line, "ascribe", a.outcome.result == AscriptionResult::Blocked ? "blocked" : "ok",
             "default " + path_text(c.path) + " to " + c.agent + ": " + g(*c.formula) + " " +
                 outcome_text(a.outcome),
             outcome_json(a.outcome));
      return;
    }
    case cmd::AscribeKind::Stereotype: {
      StereotypeAscription a = stereotype_ascribe(s, v, c.agent);
      s = std::move(a.store);
      ordered_json items = ordered_json::array();
      std::string text = "stereotype " + path_text(c.path) + " to " + c.agent;
      for (const auto& [m, o] : a.outcomes) {
        ordered_json item = outcome_json(o);
        item["attitude"] = std::string(to_string(m.attitude));
        item["formula"] = g(m.formula);
        items.push_back(std::move(item));
        text += "; " + g(m.formula) + " " + outcome_text(o);
      }
      if (a.outcomes.empty()) text += "; no stereotype applies";
      record(line, "ascribe", "ok", text, {{"items", items}});
      return;
    }
    case cmd::AscribeKind::Accept: {
      Ascription a = accept_belief(s, v, c.agent, *c.formula);
      s = std::move(a.store);
      record(line, "ascribe", a.outcome.result == AscriptionResult::Blocked ? "blocked" : "ok",
             "accept " + path_text(c.path) + " from " + c.agent + ": " + g(*c.formula) + " " +
                 outcome_text(a.outcome),
             outcome_json(a.outcome));
      return;
    }
    case cmd::AscribeKind::Demand: {
      OnDemandAscription a = ascribe_on_demand(s, v, AttitudeType::Belief, *c.formula);
      s = std::move(a.store);
      ordered_json steps = ordered_json::array();
      for (const AscriptionStep& st : a.steps) {
        ordered_json j = outcome_json(st.outcome);
        j["from"] = to_string(st.source, s.owner());
        j["to"] = st.target_agent;
        j["formula"] = g(st.formula);
        steps.push_back(std::move(j));
      }
      record(line, "ascribe", "ok",
             "demand " + path_text(c.path) + ": " + g(*c.formula) + " " +
                 std::string(to_string(a.status)) + " after " + std::to_string(a.steps.size()) +
                 " steps",
             {{"status", std::string(to_string(a.status))}, {"steps", steps}});
      return;
    }
  }
}

void ScenarioRunner::execute_perform(int line, const cmd::Perform& c) {
  const bool speaker = c.side != cmd::Side::Hearer;
  const bool hearer = c.side != cmd::Side::Speaker;
  const std::string act = g(c.act.term());
  BeliefStore& sstore = store_for(c.at ? c.at->owner : c.act.speaker);
  BeliefStore& hstore = store_for(c.at ? c.at->owner : c.act.hearer);
  const Viewpoint base = c.at ? c.at->viewpoint : Viewpoint{};

  auto report = [&](const char* side, const UpdateReport& r) {
    ordered_json conds = ordered_json::array();
    std::string text = std::string(side) + " " + act;
    for (const ConditionUpdate& u : r.conditions) {
      ordered_json j = outcome_json(u.outcome);
      j["condition"] = g(u.condition);
      j["written"] = g(u.written);
      conds.push_back(std::move(j));
      text += "; " + g(u.written) + " " + outcome_text(u.outcome);
    }
    if (r.intention_dropped) text += "; intention dropped";
    record(line, "perform", "ok", text,
           {{"side", side}, {"conditions", conds}, {"intention_dropped", r.intention_dropped}});
  };

  // Both sides are computed before either store changes.
  std::optional<UpdateReport> sr;
  std::optional<UpdateReport> hr;
  if (speaker) {
    const Felicity fel = check_felicity(sstore, c.act, base);
    if (!fel.felicitous()) {
      ordered_json missing = ordered_json::array();
      std::string text = act + " is not felicitous; missing";
      for (const Formula& f : fel.missing) {
        missing.push_back(g(f));
        text += " " + g(f);
      }
      record(line, "felicity", "warning", text, {{"missing", missing}});
    }
    sr = speaker_update(sstore, c.act, base);
  }
  if (hearer) hr = hearer_update(speaker && c.at ? sr->store : hstore, c.act, base);
  if (sr) {
    sstore = sr->store;
    report("speaker", *sr);
  }
  if (hr) {
    hstore = hr->store;
    report("hearer", *hr);
  }
}

void ScenarioRunner::execute_simulate(int line, const cmd::Simulate& c) {
  BeliefStore& s = store_for(c.path.owner);
  SimulationResult r = simulate(s, c.path.viewpoint, c.goals, operators_, config_.limits);
  ordered_json data;
  data["status"] = std::string(to_string(r.search.status));
  data["nodes"] = r.search.nodes;
  std::string text = path_text(c.path) + " " + std::string(to_string(r.search.status));
  if (r.search.plan) {
    data["plan"] = plan_json(*r.search.plan);
    text += " " + plan_text(*r.search.plan);
    s = std::move(r.store);
  }
  ordered_json asc = ordered_json::array();
  for (const AscriptionStep& st : r.ascriptions) {
    asc.push_back({{"to", st.target_agent}, {"formula", g(st.formula)}});
  }
  data["ascriptions"] = asc;
  std::string status = "ok";
  if (r.search.status == SearchStatus::NodeLimit) {
    limit_ = true;
    status = "limit";
    data["frontier"] = r.search.frontier;
    text += " (" + std::to_string(r.search.frontier) + " open nodes)";
  } else if (!r.search.plan) {
    status = "fail";
    failed_ = true;
  }
  record(line, "simulate", status, text, data);
}

void ScenarioRunner::execute_recognize(int line, const cmd::Recognize& c) {
  BeliefStore& s = store_for(c.path.owner);
  Recognition r = recognize(s, c.path.viewpoint, c.observed, operators_, config_.limits);
  ordered_json data;
  ordered_json cands = ordered_json::array();
  for (const Term& t : r.candidates) cands.push_back(g(t));
  data["candidates"] = cands;
  std::string text = path_text(c.path) + " observing " + g(c.observed);
  if (r.result) {
    ordered_json goals = ordered_json::array();
    std::string gl;
    for (const Term& t : r.result->ascribed_goals) {
      goals.push_back(g(t));
      gl += (gl.empty() ? "" : ", ") + g(t);
    }
    data["goals"] = goals;
    data["plan"] = plan_json(r.result->plan);
    text += ": goals {" + gl + "} plan " + plan_text(r.result->plan);
    s = std::move(r.store);
  } else {
    text += ": none";
  }
  record(line, "recognize", "ok", text, data);
}

RunResult run(const std::vector<ScenarioCommand>& commands, const RunConfig& config) {
  ScenarioRunner runner(config);
  for (const ScenarioCommand& c : commands) {
    if (runner.fatal()) break;
    runner.execute(c);
  }
  return RunResult{runner.stores(), runner.trace(), runner.exit_status()};
}

std::string save_store(const BeliefStore& store) { return render(store, RenderFormat::Structured); }

BeliefStore load_store(std::string_view text, std::size_t max_depth) {
  const std::vector<ScenarioCommand> commands = parse_scenario(text);
  std::string owner = "System";
  if (!commands.empty()) {
    if (const auto* a = std::get_if<cmd::DeclareAgent>(&commands.front().body)) owner = a->name;
  }
  BeliefStore s(owner, max_depth);
  ActLibrary acts = ActLibrary::builtin();
  auto check_owner = [&](const Path& p, int line) {
    if (p.owner != owner) {
      throw Error("line " + std::to_string(line) + ": store owner is " + owner + ", not " +
                  p.owner);
    }
  };
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const ScenarioCommand& c = commands[i];
    std::visit(Overloaded{
                   [&](const cmd::DeclareAgent& d) {
                     if (i != 0 || d.name != owner) {
                       throw Error("line " + std::to_string(c.line) +
                                   ": a stored store declares one agent, first");
                     }
                   },
                   [&](const cmd::ResetActs& r) {
                     acts = r.builtin ? ActLibrary::builtin() : ActLibrary{};
                   },
                   [&](const cmd::DefineAct& d) { acts.add(d.schema); },
                   [&](const cmd::Stereotype& st) { s = s.with_stereotype(st.name, st.members); },
                   [&](const cmd::Assert& a) {
                     check_owner(a.path, c.line);
                     s = assert_attitude(s, a.path.viewpoint, a.attitude, a.formula);
                   },
                   [&](const cmd::Retract& a) {
                     check_owner(a.path, c.line);
                     s = retract_attitude(s, a.path.viewpoint, a.attitude, a.formula);
                   },
                   [&](const cmd::Topic& t) {
                     check_owner(t.path, c.line);
                     s.validate(t.path.viewpoint);
                     s = s.with_topic(s.address(t.path.viewpoint, t.attitude), t.label);
                   },
                   [&](const cmd::Trust& t) {
                     check_owner(t.path, c.line);
                     s = assert_trust(s, t.path.viewpoint, t.agent);
                   },
                   [&](const auto&) {
                     throw Error("line " + std::to_string(c.line) +
                                 ": command not allowed in a stored belief store");
                   },
               },
               c.body);
  }
  return s.with_acts(std::move(acts));
}

}  // namespace nestbelief
