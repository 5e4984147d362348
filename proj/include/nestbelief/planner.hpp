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

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nestbelief/term.hpp"

namespace nestbelief {

/// STRIPS operator over flat facts. Attitudes appear as ordinary facts with
/// the reserved functors believe/goal/intend, so the planner never looks
/// inside them.
struct Operator {
  std::string name;
  std::vector<Term> params;
  std::vector<Term> preconditions;
  std::vector<Term> add;
  std::vector<Term> del;
  /// Mental acts record the engine's own reasoning (ascription), not
  /// something the simulated agent does.
  bool mental = false;

  /// `name(params...)`.
  Term head() const;
  /// Throws Error when an effect uses a variable that is not a parameter.
  void validate() const;
  /// Copy with every variable V renamed to V_<suffix>.
  Operator renamed(int suffix) const;

  friend bool operator==(const Operator&, const Operator&) = default;
};

/// `operator name(P, ...) pre { ... } add { ... } del { ... }`
std::string format_operator(const Operator& op);

using StepId = int;
inline constexpr StepId kStartStep = 0;
inline constexpr StepId kFinishStep = 1;

struct Step {
  StepId id = 0;
  Operator op;
};

struct CausalLink {
  StepId producer = 0;
  Term condition;
  StepId consumer = 0;

  friend bool operator==(const CausalLink&, const CausalLink&) = default;
};

struct OpenCondition {
  StepId step = 0;
  Term condition;
};

/// Non-codesignation constraint introduced by separation.
struct Separation {
  Term lhs;
  Term rhs;
};

/// Partial-order plan. Step ids index `steps`; 0 is the start step whose
/// add list is the initial state, 1 is the finish step whose preconditions
/// are the goals.
struct Plan {
  std::vector<Step> steps;
  std::set<std::pair<StepId, StepId>> ordering;
  std::vector<CausalLink> links;
  Bindings bindings;
  std::vector<Separation> separations;
  std::vector<OpenCondition> agenda;

  /// Number of steps other than start and finish.
  std::size_t action_count() const { return steps.size() - 2; }
  /// Transitive `a` before `b`.
  bool precedes(StepId a, StepId b) const;
  bool ordering_acyclic() const;
  bool separations_hold() const;
  Term instantiate(const Term& t) const { return substitute(bindings, t); }
  /// Step head with bindings applied.
  Term instance(StepId id) const { return instantiate(steps[id].op.head()); }
  /// Topological order, smallest id first among ready steps.
  std::vector<StepId> linearization() const;
  /// Goals (instantiated) achieved by a link into the finish step, paired
  /// with the producing step.
  std::vector<std::pair<Term, StepId>> goal_links() const;
};

struct Threat {
  std::size_t link = 0;
  StepId step = 0;
  Term effect;
  bool deletes = false;
};

/// Every (link, step, effect) where the step could fall between producer and
/// consumer and its add or delete effect could codesignate with the
/// protected condition. Adders count as threats as well as deleters, which
/// is what keeps the search systematic.
std::vector<Threat> find_threats(const Plan& plan);

/// Children that resolve `threat`: promotion (threat before producer) and
/// demotion (consumer before threat), both forcing the effect to codesignate
/// with the condition, then one separation child per binding in the
/// unifier, each asserting the earlier bindings and denying the next. The
/// children are mutually exclusive. Inconsistent children are dropped.
std::vector<Plan> resolve_threat(const Plan& plan, const Threat& threat);

struct PlanLimits {
  std::size_t max_steps = 8;
  std::size_t max_nodes = 200000;
};

enum class SearchStatus {
  Found,
  /// The whole search space was explored; no plan of any length exists.
  NoPlan,
  /// No plan within max_steps; longer plans were not ruled out.
  StepLimit,
  /// max_nodes was reached before the search finished.
  NodeLimit,
};
std::string_view to_string(SearchStatus s);

struct Problem {
  std::vector<Term> initial;
  std::vector<Term> goals;
  std::vector<Operator> operators;
  /// Ground step that must be part of the plan and must feed the goals
  /// through causal links. Used by plan recognition.
  std::optional<Operator> required;
  /// Extra ground operators offered for a ground open condition that nothing
  /// else supplies, e.g. an ascription mental act. Results must be
  /// deterministic in the condition.
  std::function<std::vector<Operator>(const Term&)> support;
};

struct PlanResult {
  SearchStatus status = SearchStatus::NoPlan;
  std::optional<Plan> plan;
  std::size_t nodes = 0;
  /// Open search nodes when the node limit hit.
  std::size_t frontier = 0;
};

Plan initial_plan(const Problem& problem);

/// Children of one search node with at most `step_bound` actions. Sets
/// `*cut` when a new step was needed but the bound forbade it.
std::vector<Plan> refine(const Problem& problem, const Plan& plan, std::size_t step_bound,
                         bool* cut = nullptr);

bool is_complete(const Plan& plan);

/// Iterative deepening on the number of steps, depth-first within a bound,
/// last-in-first-out open conditions, operators tried in name order.
PlanResult plan(const Problem& problem, const PlanLimits& limits = {});
PlanResult plan(const std::vector<Term>& initial, const std::vector<Term>& goals,
                const std::vector<Operator>& operators, const PlanLimits& limits = {});

/// Depth-first walk over every node of the search tree for one step bound.
/// The visitor gets each node and whether it is a leaf. Stops early once
/// `max_nodes` nodes were visited; returns the number visited.
std::size_t enumerate_search_tree(const Problem& problem, std::size_t step_bound,
                                  const std::function<void(const Plan&, bool)>& visit,
                                  std::size_t max_nodes = 1000000);

}  // namespace nestbelief
