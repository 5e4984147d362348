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

#include "nestbelief/ascription.hpp"

#include "nestbelief/errors.hpp"

namespace nestbelief {

std::string_view to_string(AscriptionResult r) {
  switch (r) {
    case AscriptionResult::Ascribed: return "ascribed";
    case AscriptionResult::Blocked: return "blocked";
    case AscriptionResult::AlreadyHeld: return "already-held";
  }
  return "ascribed";
}

Ascription ascribe_into(const BeliefStore& store, const Viewpoint& source,
                        const std::string& target_agent, AttitudeType attitude, const Formula& f) {
  if (target_agent == store.holder(source)) {
    throw PreconditionError("cannot ascribe to " + target_agent + " from its own viewpoint");
  }
  Viewpoint target = source.child(target_agent);
  store.validate(target);
  switch (holds(store, target, attitude, f)) {
    case Status::Contrary:
      return {store, {AscriptionResult::Blocked, negate(f)}};
    case Status::Holds:
      return {store, {AscriptionResult::AlreadyHeld, std::nullopt}};
    case Status::Unknown:
      break;
  }
  return {assert_attitude(store, target, attitude, f), {AscriptionResult::Ascribed, std::nullopt}};
}

Ascription default_ascribe(const BeliefStore& store, const Viewpoint& source,
                           const std::string& target_agent, const Formula& f) {
  if (holds(store, source, AttitudeType::Belief, f) != Status::Holds) {
    throw PreconditionError(to_string(f, Syntax::Ground) + " is not believed at " +
                            to_string(source, store.owner()));
  }
  return ascribe_into(store, source, target_agent, AttitudeType::Belief, f);
}

std::vector<std::string> stereotypes_of(const BeliefStore& store, const Viewpoint& v,
                                        std::string_view agent) {
  std::vector<std::string> out;
  for (const auto& [name, members] : store.stereotypes()) {
    Formula isa(Term::compound("isa", {Term::constant(std::string(agent)), Term::constant(name)}));
    if (holds(store, v, AttitudeType::Belief, isa) == Status::Holds) out.push_back(name);
  }
  return out;
}

StereotypeAscription stereotype_ascribe(const BeliefStore& store, const Viewpoint& source,
                                        const std::string& target_agent) {
  StereotypeAscription out{store, {}};
  for (const std::string& name : stereotypes_of(store, source, target_agent)) {
    for (const StereotypeMember& m : store.stereotypes().at(name)) {
      Ascription a = ascribe_into(out.store, source, target_agent, m.attitude, m.formula);
      out.store = std::move(a.store);
      out.outcomes.emplace_back(m, a.outcome);
    }
  }
  return out;
}

Ascription accept_belief(const BeliefStore& store, const Viewpoint& acceptor,
                         const std::string& source_agent, const Formula& p) {
  const std::string& agent1 = store.holder(acceptor);
  const Formula source_belief =
      Formula::attitude(AttitudeType::Belief, Term::constant(source_agent), p);
  if (holds(store, acceptor, AttitudeType::Belief, source_belief) != Status::Holds) {
    throw PreconditionError("belief(Agent1,belief(Agent2,Proposition)) fails: " + agent1 +
                            " does not believe " + source_agent + " believes " +
                            to_string(p, Syntax::Ground));
  }
  const Status own = holds(store, acceptor, AttitudeType::Belief, p);
  if (own == Status::Contrary) {
    throw PreconditionError("not(belief(Agent1,not(Proposition))) fails: " + agent1 +
                            " believes " + to_string(negate(p), Syntax::Ground));
  }
  if (holds(store, acceptor, AttitudeType::Belief, trust_formula(source_agent)) != Status::Holds) {
    throw PreconditionError("belief(Agent1,trustworthy(Agent2)) fails: " + agent1 +
                            " does not trust " + source_agent);
  }
  if (own == Status::Holds) return {store, {AscriptionResult::AlreadyHeld, std::nullopt}};
  return {assert_attitude(store, acceptor, AttitudeType::Belief, p),
          {AscriptionResult::Ascribed, std::nullopt}};
}

OnDemandAscription ascribe_on_demand(const BeliefStore& store, const Viewpoint& v,
                                     AttitudeType at, const Formula& f) {
  store.validate(v);
  OnDemandAscription out{store, holds(store, v, at, f), {}};
  if (out.status != Status::Unknown || at != AttitudeType::Belief) return out;

  if (f.is_attitude() && !f.negated()) {
    if (f.attitude() != AttitudeType::Belief || !f.agent().is_constant()) return out;
    const std::string& agent = f.agent().name();
    if (agent == store.holder(v)) return ascribe_on_demand(store, v, at, f.body());
    if (v.depth() + 1 > store.max_depth()) return out;
    return ascribe_on_demand(store, v.child(agent), at, f.body());
  }

  for (std::size_t k = v.depth(); k-- > 0;) {
    const Viewpoint outer = v.prefix(k);
    const Status s = holds(out.store, outer, AttitudeType::Belief, f);
    if (s == Status::Contrary) return out;
    if (s == Status::Unknown) continue;
    for (std::size_t j = k; j < v.depth(); ++j) {
      const Viewpoint from = v.prefix(j);
      Ascription a = default_ascribe(out.store, from, v.hops()[j].agent, f);
      out.steps.push_back(
          AscriptionStep{from, v.hops()[j].agent, AttitudeType::Belief, f, a.outcome});
      out.store = std::move(a.store);
      if (a.outcome.result == AscriptionResult::Blocked) return out;
    }
    out.status = holds(out.store, v, at, f);
    return out;
  }
  return out;
}

}  // namespace nestbelief
