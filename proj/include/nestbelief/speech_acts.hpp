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

#include <string>
#include <string_view>
#include <vector>

#include "nestbelief/act_library.hpp"
#include "nestbelief/ascription.hpp"
#include "nestbelief/belief_store.hpp"

namespace nestbelief {

/// A ground performance of an act schema.
struct ActInstance {
  std::string act;
  std::string speaker;
  std::string hearer;
  Proposition content;

  /// `act(speaker, hearer, content)`.
  Term term() const;
  /// Reads `act(S, H, P)`; throws Error if the shape is wrong or S == H.
  static ActInstance from_term(const Term& t);

  friend bool operator==(const ActInstance&, const ActInstance&) = default;
};

/// Parent conditions first, then the act's own, without duplicates. Throws
/// UnknownActError or CycleError.
std::vector<Formula> resolve_preconditions(const ActLibrary& library, std::string_view act);

/// Preconditions with Speaker, Hearer and Proposition replaced by the
/// instance's values.
std::vector<Formula> bound_preconditions(const ActLibrary& library, const ActInstance& act);

/// Viewpoint of `agent` as seen from `base`: `base` itself when its holder is
/// the agent, otherwise one level deeper.
Viewpoint viewpoint_of(const BeliefStore& store, const Viewpoint& base, const std::string& agent);

struct Felicity {
  /// Unmet preconditions, in resolved order. Empty means felicitous.
  std::vector<Formula> missing;
  bool felicitous() const { return missing.empty(); }
};

/// Evaluates each bound precondition from the speaker's viewpoint.
Felicity check_felicity(const BeliefStore& store, const ActInstance& act,
                        const Viewpoint& base = {});

struct ConditionUpdate {
  Formula condition;
  /// What was written, relative to the updating agent's own viewpoint.
  Formula written;
  AscriptionOutcome outcome;
};

struct UpdateReport {
  BeliefStore store;
  std::vector<ConditionUpdate> conditions;
  bool intention_dropped = false;
};

/// After performing `act`, the speaker ascribes every condition C to the
/// hearer (writing believe(Hearer, C) from its own viewpoint) and drops the
/// intention to perform the act. Goals are left alone.
UpdateReport speaker_update(const BeliefStore& store, const ActInstance& act,
                            const Viewpoint& base = {});

/// After observing `act`, the hearer ascribes every condition C itself, one
/// level shallower than the speaker rule. The content is not adopted.
UpdateReport hearer_update(const BeliefStore& store, const ActInstance& act,
                           const Viewpoint& base = {});

/// `act <name> class <class> [isa <parent>] pre { f; ... }`
std::string format_act(const ActSchema& schema);

/// The built-in library in DSL form.
std::string_view builtin_library_text();

}  // namespace nestbelief
