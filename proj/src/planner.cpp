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

#include "nestbelief/planner.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nestbelief/errors.hpp"

namespace nestbelief {

Term Operator::head() const { return Term::compound(name, params); }

void Operator::validate() const {
  std::set<std::string> allowed;
  for (const Term& p : params) p.collect_variables(allowed);
  for (const auto* list : {&add, &del}) {
    for (const Term& e : *list) {
      std::set<std::string> used;
      e.collect_variables(used);
      for (const std::string& v : used) {
        if (!allowed.contains(v)) {
          throw Error("operator " + name + ": effect variable " + v + " is not a parameter");
        }
      }
    }
  }
}

Operator Operator::renamed(int suffix) const {
  std::set<std::string> vars;
  for (const Term& t : params) t.collect_variables(vars);
  for (const auto* list : {&preconditions, &add, &del}) {
    for (const Term& t : *list) t.collect_variables(vars);
  }
  if (vars.empty()) return *this;
  Bindings b;
  for (const std::string& v : vars) b.emplace(v, Term::variable(v + "_" + std::to_string(suffix)));
  auto map = [&](const std::vector<Term>& in) {
    std::vector<Term> out;
    out.reserve(in.size());
    for (const Term& t : in) out.push_back(substitute(b, t));
    return out;
  };
  Operator r = *this;
  r.params = map(params);
  r.preconditions = map(preconditions);
  r.add = map(add);
  r.del = map(del);
  return r;
}

std::string format_operator(const Operator& op) {
  std::string out = "operator " + to_string(op.head());
  auto block = [&](std::string_view word, const std::vector<Term>& list) {
    out += " ";
    out += word;
    out += " {";
    for (std::size_t i = 0; i < list.size(); ++i) {
      out += i ? "; " : " ";
      out += to_string(list[i]);
    }
    out += list.empty() ? "}" : " }";
  };
  block("pre", op.preconditions);
  block("add", op.add);
  block("del", op.del);
  return out;
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NoPlan: return "no-plan";
    case SearchStatus::StepLimit: return "step-limit";
    case SearchStatus::NodeLimit: return "node-limit";
  }
  return "no-plan";
}

bool Plan::precedes(StepId a, StepId b) const {
  if (a == b) return false;
  if (a == kStartStep || b == kFinishStep) return true;
  if (a == kFinishStep || b == kStartStep) return false;
  std::vector<char> seen(steps.size(), 0);
  std::vector<StepId> stack{a};
  while (!stack.empty()) {
    StepId cur = stack.back();
    stack.pop_back();
    for (auto it = ordering.lower_bound({cur, 0}); it != ordering.end() && it->first == cur; ++it) {
      if (it->second == b) return true;
      if (!seen[it->second]) {
        seen[it->second] = 1;
        stack.push_back(it->second);
      }
    }
  }
  return false;
}

bool Plan::ordering_acyclic() const {
  for (const auto& [a, b] : ordering) {
    if (a == b || precedes(b, a)) return false;
  }
  return true;
}

bool Plan::separations_hold() const {
  return std::none_of(separations.begin(), separations.end(), [&](const Separation& s) {
    return instantiate(s.lhs) == instantiate(s.rhs);
  });
}

std::vector<StepId> Plan::linearization() const {
  const std::size_t n = steps.size();
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<StepId>> succ(n);
  auto edge = [&](StepId a, StepId b) {
    succ[a].push_back(b);
    ++indegree[b];
  };
  for (const auto& [a, b] : ordering) edge(a, b);
  for (StepId s = 2; s < static_cast<StepId>(n); ++s) {
    edge(kStartStep, s);
    edge(s, kFinishStep);
  }
  if (n >= 2) edge(kStartStep, kFinishStep);
  std::set<StepId> ready;
  for (StepId s = 0; s < static_cast<StepId>(n); ++s) {
    if (indegree[s] == 0) ready.insert(s);
  }
  std::vector<StepId> out;
  while (!ready.empty()) {
    StepId s = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(s);
    for (StepId t : succ[s]) {
      if (--indegree[t] == 0) ready.insert(t);
    }
  }
  return out;
}

std::vector<std::pair<Term, StepId>> Plan::goal_links() const {
  std::vector<std::pair<Term, StepId>> out;
  for (const CausalLink& l : links) {
    if (l.consumer == kFinishStep) out.emplace_back(instantiate(l.condition), l.producer);
  }
  return out;
}

namespace {

std::optional<Bindings> unify_in(const Plan& plan, const Term& a, const Term& b) {
  auto sigma = unify(a, b, plan.bindings);
  if (!sigma) return std::nullopt;
  for (const Separation& s : plan.separations) {
    if (substitute(*sigma, s.lhs) == substitute(*sigma, s.rhs)) return std::nullopt;
  }
  return sigma;
}

bool consistent(const Plan& p) { return p.separations_hold() && p.ordering_acyclic(); }

void order(Plan& p, StepId a, StepId b) {
  if (a == kStartStep || b == kFinishStep) return;
  p.ordering.emplace(a, b);
}

void push_preconditions(Plan& p, StepId id) {
  const auto& pre = p.steps[id].op.preconditions;
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) p.agenda.push_back({id, *it});
}

StepId add_step(Plan& p, const Operator& op) {
  const StepId id = static_cast<StepId>(p.steps.size());
  p.steps.push_back(Step{id, op.renamed(id)});
  push_preconditions(p, id);
  return id;
}

// Every step reachable backwards from the finish step through causal links.
bool feeds_goals(const Plan& p, StepId id) {
  std::set<StepId> reached{kFinishStep};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const CausalLink& l : p.links) {
      if (reached.contains(l.consumer) && reached.insert(l.producer).second) grew = true;
    }
  }
  return reached.contains(id);
}

bool acceptable(const Problem& problem, const Plan& p) {
  return !problem.required || feeds_goals(p, 2);
}

// Binds variables left free by the search to distinct fresh constants.
Plan finalize(Plan p) {
  std::set<std::string> free;
  for (const Step& s : p.steps) {
    for (const auto* list : {&s.op.params, &s.op.preconditions, &s.op.add, &s.op.del}) {
      for (const Term& t : *list) p.instantiate(t).collect_variables(free);
    }
  }
  int n = 0;
  for (const std::string& v : free) p.bindings.emplace(v, Term::constant("_v" + std::to_string(++n)));
  p.bindings = normalize(p.bindings);
  return p;
}

}  // namespace

std::vector<Threat> find_threats(const Plan& plan) {
  std::vector<Threat> out;
  for (std::size_t li = 0; li < plan.links.size(); ++li) {
    const CausalLink& link = plan.links[li];
    for (const Step& s : plan.steps) {
      const StepId t = s.id;
      if (t == kStartStep || t == kFinishStep || t == link.producer || t == link.consumer) continue;
      if (plan.precedes(t, link.producer) || plan.precedes(link.consumer, t)) continue;
      for (bool deletes : {false, true}) {
        for (const Term& e : deletes ? s.op.del : s.op.add) {
          if (unify_in(plan, e, link.condition)) out.push_back(Threat{li, t, e, deletes});
        }
      }
    }
  }
  return out;
}

std::vector<Plan> resolve_threat(const Plan& plan, const Threat& threat) {
  std::vector<Plan> out;
  const CausalLink& link = plan.links[threat.link];
  const Term effect = plan.instantiate(threat.effect);
  const Term condition = plan.instantiate(link.condition);
  auto delta = unify(effect, condition);
  if (!delta) return out;
  auto sigma = unify_in(plan, effect, condition);

  if (sigma) {
    if (link.producer != kStartStep) {
      Plan child = plan;
      child.bindings = *sigma;
      order(child, threat.step, link.producer);
      if (consistent(child)) out.push_back(std::move(child));
    }
    if (link.consumer != kFinishStep) {
      Plan child = plan;
      child.bindings = *sigma;
      order(child, link.consumer, threat.step);
      if (consistent(child)) out.push_back(std::move(child));
    }
  }

  Bindings prefix = plan.bindings;
  for (const auto& [var, value] : *delta) {
    Plan child = plan;
    child.bindings = prefix;
    child.separations.push_back(Separation{Term::variable(var), value});
    if (consistent(child)) out.push_back(std::move(child));
    auto next = unify(Term::variable(var), value, prefix);
    if (!next) break;
    prefix = std::move(*next);
  }
  return out;
}

Plan initial_plan(const Problem& problem) {
  Plan p;
  p.steps.push_back(Step{kStartStep, Operator{"start", {}, {}, problem.initial, {}, false}});
  p.steps.push_back(Step{kFinishStep, Operator{"finish", {}, problem.goals, {}, {}, false}});
  push_preconditions(p, kFinishStep);
  if (problem.required) add_step(p, *problem.required);
  return p;
}

bool is_complete(const Plan& plan) { return plan.agenda.empty() && find_threats(plan).empty(); }

std::vector<Plan> refine(const Problem& problem, const Plan& plan, std::size_t step_bound,
                         bool* cut) {
  std::vector<Threat> threats = find_threats(plan);
  if (!threats.empty()) return resolve_threat(plan, threats.front());
  if (plan.agenda.empty()) return {};

  Plan base = plan;
  const OpenCondition oc = base.agenda.back();
  base.agenda.pop_back();
  std::vector<Plan> out;

  auto link_child = [&](Plan child, StepId producer, const Bindings& sigma) {
    child.bindings = sigma;
    child.links.push_back(CausalLink{producer, oc.condition, oc.step});
    order(child, producer, oc.step);
    if (consistent(child)) out.push_back(std::move(child));
  };

  for (const Step& s : base.steps) {
    if (s.id == oc.step || s.id == kFinishStep || base.precedes(oc.step, s.id)) continue;
    for (const Term& e : s.op.add) {
      if (auto sigma = unify_in(base, e, oc.condition)) link_child(base, s.id, *sigma);
    }
  }

  std::vector<const Operator*> ops;
  for (const Operator& op : problem.operators) ops.push_back(&op);
  std::stable_sort(ops.begin(), ops.end(),
                   [](const Operator* a, const Operator* b) { return a->name < b->name; });
  std::vector<Operator> extra;
  if (problem.support) {
    const Term ground = base.instantiate(oc.condition);
    if (ground.is_ground()) extra = problem.support(ground);
  }
  for (const Operator& op : extra) ops.push_back(&op);

  const StepId fresh = static_cast<StepId>(base.steps.size());
  for (const Operator* op : ops) {
    const Operator renamed = op->renamed(fresh);
    for (const Term& e : renamed.add) {
      auto sigma = unify_in(base, e, oc.condition);
      if (!sigma) continue;
      if (base.action_count() >= step_bound) {
        if (cut) *cut = true;
        continue;
      }
      Plan child = base;
      const StepId id = add_step(child, *op);
      link_child(std::move(child), id, *sigma);
    }
  }
  return out;
}

namespace {

struct SearchOutcome {
  std::optional<Plan> found;
  bool cut = false;
  bool out_of_nodes = false;
  std::size_t frontier = 0;
};

SearchOutcome depth_first(const Problem& problem, std::size_t bound, std::size_t& nodes,
                          std::size_t max_nodes) {
  SearchOutcome r;
  std::vector<Plan> stack{initial_plan(problem)};
  while (!stack.empty()) {
    if (nodes >= max_nodes) {
      r.out_of_nodes = true;
      r.frontier = stack.size();
      return r;
    }
    Plan node = std::move(stack.back());
    stack.pop_back();
    ++nodes;
    std::vector<Plan> children = refine(problem, node, bound, &r.cut);
    if (children.empty()) {
      if (is_complete(node) && acceptable(problem, node)) {
        r.found = finalize(std::move(node));
        return r;
      }
      continue;
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  return r;
}

}  // namespace

PlanResult plan(const Problem& problem, const PlanLimits& limits) {
  for (const Operator& op : problem.operators) op.validate();
  PlanResult result;
  const std::size_t first = problem.required ? 1 : 0;
  for (std::size_t bound = first; bound <= std::max(first, limits.max_steps); ++bound) {
    SearchOutcome r = depth_first(problem, bound, result.nodes, limits.max_nodes);
    if (r.found) {
      result.status = SearchStatus::Found;
      result.plan = std::move(r.found);
      return result;
    }
    if (r.out_of_nodes) {
      result.status = SearchStatus::NodeLimit;
      result.frontier = r.frontier;
      return result;
    }
    if (!r.cut) {
      result.status = SearchStatus::NoPlan;
      return result;
    }
  }
  result.status = SearchStatus::StepLimit;
  return result;
}

PlanResult plan(const std::vector<Term>& initial, const std::vector<Term>& goals,
                const std::vector<Operator>& operators, const PlanLimits& limits) {
  Problem p;
  p.initial = initial;
  p.goals = goals;
  p.operators = operators;
  return plan(p, limits);
}

std::size_t enumerate_search_tree(const Problem& problem, std::size_t step_bound,
                                  const std::function<void(const Plan&, bool)>& visit,
                                  std::size_t max_nodes) {
  std::size_t nodes = 0;
  std::vector<Plan> stack{initial_plan(problem)};
  while (!stack.empty() && nodes < max_nodes) {
    Plan node = std::move(stack.back());
    stack.pop_back();
    ++nodes;
    std::vector<Plan> children = refine(problem, node, step_bound);
    visit(node, children.empty());
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  return nodes;
}

}  // namespace nestbelief
