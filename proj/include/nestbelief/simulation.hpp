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

#include <optional>
#include <string>
#include <vector>

#include "nestbelief/ascription.hpp"
#include "nestbelief/belief_store.hpp"
#include "nestbelief/planner.hpp"

namespace nestbelief {

inline constexpr std::string_view kDefaultAscriptionAct = "default_belief_ascription";

/// Flat facts describing what the holder of `v` believes, wants and intends:
/// its own beliefs as bare facts, beliefs of nested agents as
/// `believe(Agent, fact)`, its goals as `goal(Holder, x)` and intentions as
/// `intend(Holder, x)`. Sorted and free of duplicates.
std::vector<Term> visible_facts(const BeliefStore& store, const Viewpoint& v);

/// Writes a formula as a fact from `holder`'s perspective: the holder's own
/// beliefs lose their `believe(Holder, ...)` wrapper.
Term relativize(const Formula& f, const std::string& holder);

/// The acts of `library` as operators the holder can perform as speaker.
/// Preconditions are the bound act conditions; effects are
/// `performed(act(...))`, the hearer's ascription of every condition, and
/// the content of every `goal(Speaker, X)` condition.
std::vector<Operator> act_operators(const ActLibrary& library, const std::string& holder);

/// Ground mental-act operator for one hop of default ascription.
Operator ascription_operator(const std::string& from, const std::string& to, const Term& fact,
                             const Term& effect);

/// Intentions for every non-mental step and goals for every goal reached
/// through a non-mental step are written at `v`. Entries that would
/// contradict the store are skipped.
BeliefStore ascribe_plan(const BeliefStore& store, const Viewpoint& v, const Plan& plan);

struct SimulationResult {
  BeliefStore store;
  PlanResult search;
  std::vector<AscriptionStep> ascriptions;
};

/// Plans for the holder of `v`, using only what is visible at `v`. A ground
/// condition that is not visible triggers on-demand ascription; when it
/// succeeds the plan gains a default_belief_ascription step that supplies
/// the fact. On success the plan is ascribed at `v`.
SimulationResult simulate(const BeliefStore& store, const Viewpoint& v,
                          const std::vector<Formula>& goals, const std::vector<Operator>& domain,
                          const PlanLimits& limits = {});

struct RecognitionResult {
  Plan plan;
  std::vector<Term> ascribed_goals;
  Term observed;
};

struct Recognition {
  BeliefStore store;
  std::optional<RecognitionResult> result;
  /// Candidate goals considered, in order.
  std::vector<Term> candidates;
};

/// Candidate goals: the goal entries at `v` plus goal members of every
/// stereotype the holder is believed to fit, minus goals already true.
std::vector<Term> candidate_goals(const BeliefStore& store, const Viewpoint& v);

/// Explains `observed` (an act instance or a domain operator instance whose
/// actor is the holder of `v`) by a plan through it that reaches as many
/// candidate goals as possible; ties go to fewer steps, then to the
/// lexicographically smaller plan. Throws UnknownOperatorError for an
/// unknown action.
Recognition recognize(const BeliefStore& store, const Viewpoint& v, const Term& observed,
                      const std::vector<Operator>& domain, const PlanLimits& limits = {});

}  // namespace nestbelief
