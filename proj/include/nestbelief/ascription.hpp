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
#include <string_view>
#include <vector>

#include "nestbelief/belief_store.hpp"

namespace nestbelief {

enum class AscriptionResult { Ascribed, Blocked, AlreadyHeld };
std::string_view to_string(AscriptionResult r);

struct AscriptionOutcome {
  AscriptionResult result = AscriptionResult::Ascribed;
  /// Set iff result == Blocked: the contrary entry found at the target.
  std::optional<Formula> blocking_evidence;

  friend bool operator==(const AscriptionOutcome&, const AscriptionOutcome&) = default;
};

struct Ascription {
  BeliefStore store;
  AscriptionOutcome outcome;
};

/// One level of ascription: `formula` pushed from `source` into the `attitude`
/// space of `target_agent` nested under it.
struct AscriptionStep {
  Viewpoint source;
  std::string target_agent;
  AttitudeType attitude = AttitudeType::Belief;
  Formula formula;
  AscriptionOutcome outcome;
};

/// Writes `f` into `source > target_agent` unless its explicit negation is
/// already there. Does not require the source to hold `f`; the speaker update
/// rule uses this directly. Throws DepthError past the nesting limit.
Ascription ascribe_into(const BeliefStore& store, const Viewpoint& source,
                        const std::string& target_agent, AttitudeType attitude, const Formula& f);

/// Default ascription: a belief held at `source` is pushed to `target_agent`
/// unless the target explicitly believes the opposite. Throws
/// PreconditionError when `f` is not believed at `source` or the target is
/// the source holder itself.
Ascription default_ascribe(const BeliefStore& store, const Viewpoint& source,
                           const std::string& target_agent, const Formula& f);

struct StereotypeAscription {
  BeliefStore store;
  std::vector<std::pair<StereotypeMember, AscriptionOutcome>> outcomes;
};

/// Stereotype names St with `isa(agent, St)` believed at `v`, in name order.
std::vector<std::string> stereotypes_of(const BeliefStore& store, const Viewpoint& v,
                                        std::string_view agent);

/// For every stereotype the target is believed to fit, ascribes each member
/// attitude under the per-item contrary test.
StereotypeAscription stereotype_ascribe(const BeliefStore& store, const Viewpoint& source,
                                        const std::string& target_agent);

/// Adopts a belief the holder of `acceptor` ascribes to `source_agent`.
/// Preconditions, checked in order; the first failure raises
/// PreconditionError naming it:
///   belief(Agent1, belief(Agent2, P))
///   not(belief(Agent1, not(P)))
///   belief(Agent1, trustworthy(Agent2))
Ascription accept_belief(const BeliefStore& store, const Viewpoint& acceptor,
                         const std::string& source_agent, const Formula& p);

struct OnDemandAscription {
  BeliefStore store;
  Status status = Status::Unknown;
  std::vector<AscriptionStep> steps;
};

/// Looks `f` up at `v`; when Unknown, walks outward to the nearest level that
/// holds it and default-ascribes it back down one hop at a time. A contrary
/// level on the way blocks the walk. Goals and intentions are never ascribed
/// this way. Throws DepthError when `v` is past the nesting limit.
OnDemandAscription ascribe_on_demand(const BeliefStore& store, const Viewpoint& v,
                                     AttitudeType at, const Formula& f);

}  // namespace nestbelief
