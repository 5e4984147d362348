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

#include "nestbelief/simulation.hpp"

#include <algorithm>
#include <map>

#include "nestbelief/errors.hpp"
#include "nestbelief/speech_acts.hpp"

namespace nestbelief {
namespace {

void collect_facts(const BeliefStore& store, const Viewpoint& v, std::set<Term>& out) {
  const Term holder = Term::constant(store.holder(v));
  for (const Formula& f : store.entries(v, AttitudeType::Belief)) out.insert(f.term());
  for (AttitudeType at : {AttitudeType::Goal, AttitudeType::Intention}) {
    for (const Formula& f : store.entries(v, at)) {
      out.insert(Formula::attitude(at, holder, f).term());
    }
  }
  for (const std::string& agent : store.child_agents(v)) {
    std::set<Term> inner;
    collect_facts(store, v.child(agent), inner);
    for (const Term& t : inner) {
      out.insert(Formula::attitude(AttitudeType::Belief, Term::constant(agent), Formula(t)).term());
    }
  }
}

std::string plan_key(const Plan& p) {
  std::string key;
  for (StepId id : p.linearization()) {
    if (id < 2) continue;
    key += to_string(p.instance(id), Syntax::Ground);
    key += ';';
  }
  return key;
}

Operator ground(const Operator& op, const Bindings& b) {
  Operator g = op;
  auto map = [&](std::vector<Term>& list) {
    for (Term& t : list) t = substitute(b, t);
  };
  map(g.params);
  map(g.preconditions);
  map(g.add);
  map(g.del);
  return g;
}

Operator observed_operator(const BeliefStore& store, const std::string& holder,
                           const Term& observed, const std::vector<Operator>& domain) {
  if (store.acts().contains(observed.name()) && observed.arity() == 3) {
    const ActInstance act = ActInstance::from_term(observed);
    if (act.speaker != holder) {
      throw PreconditionError("observed act " + to_string(observed, Syntax::Ground) +
                              " is not performed by " + holder);
    }
    for (const Operator& op : act_operators(store.acts(), holder)) {
      if (op.name != act.act) continue;
      if (auto b = unify(op.head(), act.term())) return ground(op, *b);
    }
  }
  for (const Operator& op : domain) {
    if (op.name != observed.name() || op.params.size() != observed.arity()) continue;
    if (auto b = unify(op.head(), observed)) return ground(op, *b);
  }
  throw UnknownOperatorError("no operator or act matches " + to_string(observed, Syntax::Ground));
}

}  // namespace

std::vector<Term> visible_facts(const BeliefStore& store, const Viewpoint& v) {
  std::set<Term> out;
  collect_facts(store, store.address(v, AttitudeType::Belief).viewpoint, out);
  return {out.begin(), out.end()};
}

Term relativize(const Formula& f, const std::string& holder) {
  if (f.is_attitude() && !f.negated() && f.attitude() == AttitudeType::Belief &&
      f.agent() == Term::constant(holder)) {
    return relativize(f.body(), holder);
  }
  return f.term();
}

std::vector<Operator> act_operators(const ActLibrary& library, const std::string& holder) {
  const Term speaker = Term::constant(holder);
  const Term hearer = Term::variable(std::string(kHearerRole));
  const Term content = Term::variable(std::string(kPropositionRole));
  const Bindings roles{{std::string(kSpeakerRole), speaker}};
  std::vector<Operator> out;
  for (const ActSchema* schema : library.schemas()) {
    Operator op;
    op.name = schema->name;
    op.params = {speaker, hearer, content};
    op.add.push_back(Term::compound("performed", {op.head()}));
    for (const Formula& raw : resolve_preconditions(library, schema->name)) {
      const Formula c = substitute(roles, raw);
      op.preconditions.push_back(relativize(c, holder));
      op.add.push_back(Formula::attitude(AttitudeType::Belief, hearer, c).term());
      if (!c.negated() && c.attitude() == AttitudeType::Goal) {
        op.add.push_back(relativize(c.body(), holder));
      }
    }
    out.push_back(std::move(op));
  }
  return out;
}

Operator ascription_operator(const std::string& from, const std::string& to, const Term& fact,
                             const Term& effect) {
  Operator op;
  op.name = std::string(kDefaultAscriptionAct);
  op.params = {Term::constant(from), Term::constant(to), fact};
  op.add = {effect};
  op.mental = true;
  return op;
}

BeliefStore ascribe_plan(const BeliefStore& store, const Viewpoint& v, const Plan& plan) {
  BeliefStore out = store;
  auto try_assert = [&](AttitudeType at, const Formula& f) {
    try {
      out = assert_attitude(out, v, at, f);
    } catch (const Error&) {
      // Contradicted or too deep: the entry is not ascribed.
    }
  };
  for (StepId id : plan.linearization()) {
    if (id == kStartStep || id == kFinishStep || plan.steps[id].op.mental) continue;
    try_assert(AttitudeType::Intention, Formula(plan.instance(id)));
  }
  for (const auto& [goal, producer] : plan.goal_links()) {
    if (producer == kStartStep || plan.steps[producer].op.mental) continue;
    try_assert(AttitudeType::Goal, Formula(goal));
  }
  return out;
}

SimulationResult simulate(const BeliefStore& store, const Viewpoint& v,
                          const std::vector<Formula>& goals, const std::vector<Operator>& domain,
                          const PlanLimits& limits) {
  store.validate(v);
  const std::string holder = store.holder(v);
  SimulationResult out{store, {}, {}};

  Problem problem;
  problem.initial = visible_facts(store, v);
  for (const Formula& g : goals) {
    if (!g.is_ground()) throw PreconditionError("simulation goals must be ground: " + to_string(g));
    problem.goals.push_back(relativize(g, holder));
  }
  problem.operators = domain;
  for (Operator& op : act_operators(store.acts(), holder)) problem.operators.push_back(std::move(op));

  const std::set<Term> visible(problem.initial.begin(), problem.initial.end());
  std::map<Term, std::vector<Operator>> cache;
  problem.support = [&](const Term& fact) -> std::vector<Operator> {
    if (visible.contains(fact)) return {};
    if (auto it = cache.find(fact); it != cache.end()) return it->second;
    std::vector<Operator> ops;
    OnDemandAscription r = ascribe_on_demand(out.store, v, AttitudeType::Belief, Formula(fact));
    if (r.status == Status::Holds && !r.steps.empty()) {
      const AscriptionStep& last = r.steps.back();
      ops.push_back(ascription_operator(out.store.holder(last.source), last.target_agent,
                                        last.formula.term(), fact));
      out.store = std::move(r.store);
      for (auto& s : r.steps) out.ascriptions.push_back(std::move(s));
    }
    cache.emplace(fact, ops);
    return ops;
  };

  out.search = plan(problem, limits);
  if (out.search.plan) out.store = ascribe_plan(out.store, v, *out.search.plan);
  return out;
}

std::vector<Term> candidate_goals(const BeliefStore& store, const Viewpoint& v) {
  const std::string& holder = store.holder(v);
  std::vector<Term> out;
  auto consider = [&](const Formula& g) {
    const Term t = relativize(g, holder);
    if (std::find(out.begin(), out.end(), t) != out.end()) return;
    if (holds(store, v, AttitudeType::Belief, Formula(t)) == Status::Holds) return;
    out.push_back(t);
  };
  for (const Formula& g : store.entries(v, AttitudeType::Goal)) consider(g);
  if (!v.empty()) {
    for (const std::string& name : stereotypes_of(store, v.parent(), holder)) {
      for (const StereotypeMember& m : store.stereotypes().at(name)) {
        if (m.attitude == AttitudeType::Goal) consider(m.formula);
      }
    }
  }
  return out;
}

Recognition recognize(const BeliefStore& store, const Viewpoint& v, const Term& observed,
                      const std::vector<Operator>& domain, const PlanLimits& limits) {
  store.validate(v);
  const std::string holder = store.holder(v);
  const Operator step = observed_operator(store, holder, observed, domain);

  Recognition out{store, std::nullopt, candidate_goals(store, v)};
  const std::vector<Term>& candidates = out.candidates;
  if (candidates.empty()) return out;

  Problem problem;
  std::set<Term> initial;
  for (const Term& t : visible_facts(store, v)) initial.insert(t);
  for (const Term& t : step.preconditions) initial.insert(t);
  problem.initial.assign(initial.begin(), initial.end());
  problem.operators = domain;
  for (Operator& op : act_operators(store.acts(), holder)) problem.operators.push_back(std::move(op));
  problem.required = step;

  // Subsets of the candidates, largest first. Past ten candidates only
  // single goals are tried.
  const std::size_t n = candidates.size();
  const std::size_t top = n <= 10 ? n : 1;
  for (std::size_t size = top; size >= 1; --size) {
    std::optional<std::pair<Plan, std::vector<Term>>> best;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<Term> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) subset.push_back(candidates[i]);
      }
      problem.goals = subset;
      PlanResult r = plan(problem, limits);
      if (!r.plan) continue;
      const bool better =
          !best || r.plan->action_count() < best->first.action_count() ||
          (r.plan->action_count() == best->first.action_count() &&
           plan_key(*r.plan) < plan_key(best->first));
      if (better) best.emplace(std::move(*r.plan), std::move(subset));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (best) {
      out.store = ascribe_plan(store, v, best->first);
      out.result = RecognitionResult{std::move(best->first), std::move(best->second), observed};
      return out;
    }
  }
  return out;
}

}  // namespace nestbelief
