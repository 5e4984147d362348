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

#include "nestbelief/speech_acts.hpp"

#include <algorithm>
#include <set>

#include "nestbelief/errors.hpp"

namespace nestbelief {

std::string_view to_string(ActClass c) {
  switch (c) {
    case ActClass::Question: return "question";
    case ActClass::Answer: return "answer";
    case ActClass::Request: return "request";
    case ActClass::Inform: return "inform";
  }
  return "inform";
}

std::optional<ActClass> parse_act_class(std::string_view word) {
  if (word == "question") return ActClass::Question;
  if (word == "answer") return ActClass::Answer;
  if (word == "request") return ActClass::Request;
  if (word == "inform") return ActClass::Inform;
  return std::nullopt;
}

void ActLibrary::add(ActSchema schema) {
  for (const Formula& f : schema.own_preconditions) {
    if (!f.is_attitude() || f.agent() != Term::variable(std::string(kSpeakerRole))) {
      throw Error("precondition of act " + schema.name +
                  " must be an attitude of Speaker: " + to_string(f));
    }
  }
  std::string name = schema.name;
  acts_.insert_or_assign(std::move(name), std::move(schema));
}

void ActLibrary::remove(std::string_view name) {
  auto it = acts_.find(name);
  if (it != acts_.end()) acts_.erase(it);
}

const ActSchema* ActLibrary::find(std::string_view name) const {
  auto it = acts_.find(name);
  return it == acts_.end() ? nullptr : &it->second;
}

std::vector<const ActSchema*> ActLibrary::schemas() const {
  std::vector<const ActSchema*> out;
  for (const auto& [_, s] : acts_) out.push_back(&s);
  return out;
}

Term ActInstance::term() const {
  return Term::compound(act, {Term::constant(speaker), Term::constant(hearer), content.term()});
}

ActInstance ActInstance::from_term(const Term& t) {
  if (!t.is_compound() || t.arity() != 3 || !t.args()[0].is_constant() ||
      !t.args()[1].is_constant()) {
    throw Error("act instance must have the form act(Speaker,Hearer,Proposition): " +
                to_string(t, Syntax::Ground));
  }
  ActInstance a{t.name(), t.args()[0].name(), t.args()[1].name(), Proposition(t.args()[2])};
  if (a.speaker == a.hearer) throw Error("speaker and hearer must differ in " + a.act);
  return a;
}

std::vector<Formula> resolve_preconditions(const ActLibrary& library, std::string_view act) {
  std::vector<const ActSchema*> chain;
  std::set<std::string, std::less<>> seen;
  std::string_view cur = act;
  while (true) {
    const ActSchema* s = library.find(cur);
    if (!s) throw UnknownActError("unknown act: " + std::string(cur));
    if (!seen.insert(s->name).second) {
      throw CycleError("inheritance cycle through act " + s->name);
    }
    chain.push_back(s);
    if (!s->parent) break;
    cur = *s->parent;
  }
  std::vector<Formula> out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    for (const Formula& f : (*it)->own_preconditions) {
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
  }
  return out;
}

std::vector<Formula> bound_preconditions(const ActLibrary& library, const ActInstance& act) {
  Bindings roles{
      {std::string(kSpeakerRole), Term::constant(act.speaker)},
      {std::string(kHearerRole), Term::constant(act.hearer)},
      {std::string(kPropositionRole), act.content.term()},
  };
  std::vector<Formula> out;
  for (const Formula& f : resolve_preconditions(library, act.act)) {
    out.push_back(substitute(roles, f));
  }
  return out;
}

Viewpoint viewpoint_of(const BeliefStore& store, const Viewpoint& base, const std::string& agent) {
  if (store.holder(base) == agent) return base;
  return base.child(agent);
}

Felicity check_felicity(const BeliefStore& store, const ActInstance& act, const Viewpoint& base) {
  const Viewpoint sv = viewpoint_of(store, base, act.speaker);
  Felicity out;
  for (const Formula& c : bound_preconditions(store.acts(), act)) {
    if (holds(store, sv, AttitudeType::Belief, c) != Status::Holds) out.missing.push_back(c);
  }
  return out;
}

UpdateReport speaker_update(const BeliefStore& store, const ActInstance& act,
                            const Viewpoint& base) {
  const Viewpoint sv = viewpoint_of(store, base, act.speaker);
  UpdateReport out{store, {}, false};
  for (const Formula& c : bound_preconditions(store.acts(), act)) {
    Ascription a = ascribe_into(out.store, sv, act.hearer, AttitudeType::Belief, c);
    out.store = std::move(a.store);
    out.conditions.push_back(ConditionUpdate{
        c, Formula::attitude(AttitudeType::Belief, Term::constant(act.hearer), c), a.outcome});
  }
  const Formula intention(act.term());
  const BeliefStore dropped = retract_attitude(out.store, sv, AttitudeType::Intention, intention);
  out.intention_dropped = !(dropped == out.store);
  out.store = dropped;
  return out;
}

UpdateReport hearer_update(const BeliefStore& store, const ActInstance& act,
                           const Viewpoint& base) {
  const Viewpoint hv = viewpoint_of(store, base, act.hearer);
  UpdateReport out{store, {}, false};
  for (const Formula& c : bound_preconditions(store.acts(), act)) {
    AscriptionOutcome outcome;
    switch (holds(out.store, hv, AttitudeType::Belief, c)) {
      case Status::Contrary:
        outcome = {AscriptionResult::Blocked, negate(c)};
        break;
      case Status::Holds:
        outcome = {AscriptionResult::AlreadyHeld, std::nullopt};
        break;
      case Status::Unknown:
        out.store = assert_attitude(out.store, hv, AttitudeType::Belief, c);
        outcome = {AscriptionResult::Ascribed, std::nullopt};
        break;
    }
    out.conditions.push_back(ConditionUpdate{c, c, outcome});
  }
  return out;
}

std::string format_act(const ActSchema& schema) {
  std::string out = "act " + schema.name + " class " + std::string(to_string(schema.act_class));
  if (schema.parent) out += " isa " + *schema.parent;
  out += " pre {";
  for (std::size_t i = 0; i < schema.own_preconditions.size(); ++i) {
    out += i ? "; " : " ";
    out += to_string(schema.own_preconditions[i]);
  }
  out += schema.own_preconditions.empty() ? "}" : " }";
  return out;
}

}  // namespace nestbelief
