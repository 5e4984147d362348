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

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nestbelief/act_library.hpp"
#include "nestbelief/formula.hpp"

namespace nestbelief {

struct Hop {
  std::string agent;
  AttitudeType attitude = AttitudeType::Belief;

  friend auto operator<=>(const Hop&, const Hop&) = default;
  friend bool operator==(const Hop&, const Hop&) = default;
};

/// Path of nested environments below the store owner's top level. The empty
/// viewpoint is the owner's own environment; `{John, Mary}` reads "owner
/// believes John believes Mary ...".
class Viewpoint {
 public:
  Viewpoint() = default;
  explicit Viewpoint(std::vector<Hop> hops) : hops_(std::move(hops)) {}
  Viewpoint(std::initializer_list<std::string_view> belief_agents);

  const std::vector<Hop>& hops() const { return hops_; }
  std::size_t depth() const { return hops_.size(); }
  bool empty() const { return hops_.empty(); }

  Viewpoint child(std::string agent, AttitudeType at = AttitudeType::Belief) const;
  Viewpoint prefix(std::size_t n) const;
  Viewpoint parent() const { return prefix(depth() == 0 ? 0 : depth() - 1); }

  friend auto operator<=>(const Viewpoint&, const Viewpoint&) = default;
  friend bool operator==(const Viewpoint&, const Viewpoint&) = default;

 private:
  std::vector<Hop> hops_;
};

/// `Owner > John > Mary`.
std::string to_string(const Viewpoint& v, std::string_view owner);

enum class Status { Holds, Contrary, Unknown };
std::string_view to_string(Status s);

struct EnvKey {
  Viewpoint viewpoint;
  AttitudeType attitude = AttitudeType::Belief;

  friend auto operator<=>(const EnvKey&, const EnvKey&) = default;
  friend bool operator==(const EnvKey&, const EnvKey&) = default;
};

struct StereotypeMember {
  AttitudeType attitude = AttitudeType::Belief;
  Formula formula;

  friend auto operator<=>(const StereotypeMember&, const StereotypeMember&) = default;
  friend bool operator==(const StereotypeMember&, const StereotypeMember&) = default;
};

/// One agent's complete attitude state: nested environments, stereotypes and
/// the act library. Immutable; every modifier returns a new store.
///
/// Environments are kept sparse: an address with no entries is simply absent
/// from the map, so assert followed by retract restores an equal store.
class BeliefStore {
 public:
  static constexpr std::size_t kDefaultMaxDepth = 5;

  explicit BeliefStore(std::string owner = "System", std::size_t max_depth = kDefaultMaxDepth);

  const std::string& owner() const { return owner_; }
  std::size_t max_depth() const { return max_depth_; }
  BeliefStore with_max_depth(std::size_t depth) const;

  /// Agent whose environment `v` addresses.
  const std::string& holder(const Viewpoint& v) const;

  /// Throws ViewpointError for malformed paths and DepthError past max_depth.
  void validate(const Viewpoint& v) const;

  /// Folds a final goal/intention hop into the attitude of the address.
  EnvKey address(const Viewpoint& v, AttitudeType at) const;

  const std::set<Formula>& entries(const EnvKey& key) const;
  const std::set<Formula>& entries(const Viewpoint& v, AttitudeType at) const {
    return entries(EnvKey{v, at});
  }
  const std::map<EnvKey, std::set<Formula>>& environments() const { return envs_; }

  /// Agents with a non-empty environment directly below `v`.
  std::set<std::string> child_agents(const Viewpoint& v) const;
  bool subtree_empty(const Viewpoint& v) const;

  // Literal modifiers: no consistency or normalisation checks.
  BeliefStore with_entry(const EnvKey& key, const Formula& f) const;
  BeliefStore without_entry(const EnvKey& key, const Formula& f) const;

  std::optional<std::string> topic(const EnvKey& key) const;
  const std::map<EnvKey, std::string>& topics() const { return topics_; }
  BeliefStore with_topic(const EnvKey& key, std::optional<std::string> label) const;

  const std::map<std::string, std::set<StereotypeMember>>& stereotypes() const {
    return stereotypes_;
  }
  BeliefStore with_stereotype(const std::string& name, std::set<StereotypeMember> members) const;

  const ActLibrary& acts() const { return acts_; }
  BeliefStore with_acts(ActLibrary acts) const;

  /// Structural equality; max_depth is configuration and is not compared.
  friend bool operator==(const BeliefStore& a, const BeliefStore& b);

 private:
  std::string owner_;
  std::size_t max_depth_;
  std::map<EnvKey, std::set<Formula>> envs_;
  std::map<EnvKey, std::string> topics_;
  std::map<std::string, std::set<StereotypeMember>> stereotypes_;
  ActLibrary acts_;
};

/// Where a formula lives once positive belief attitudes are unfolded into
/// nested environments: `believe(John, p)` at `v` is `p` at `v > John`.
/// Returns nullopt if the unfolded address would exceed the depth limit.
struct Location {
  EnvKey key;
  Formula literal;
};
std::optional<Location> locate(const BeliefStore& store, const Viewpoint& v, AttitudeType at,
                               const Formula& f);

/// Tri-state lookup. Holds iff the formula is present, Contrary iff its
/// explicit negation is. Pure: performs no ascription.
Status holds(const BeliefStore& store, const Viewpoint& v, AttitudeType at, const Formula& f);

/// Throws ConsistencyError when the formula is Contrary at the address,
/// DepthError past the nesting limit and PreconditionError for non-ground
/// input. Asserting something already held returns an equal store.
BeliefStore assert_attitude(const BeliefStore& store, const Viewpoint& v, AttitudeType at,
                            const Formula& f);

/// Removing an absent entry is a no-op.
BeliefStore retract_attitude(const BeliefStore& store, const Viewpoint& v, AttitudeType at,
                             const Formula& f);

/// `trustworthy(agent)` believed at `v`.
Formula trust_formula(std::string_view agent);
BeliefStore assert_trust(const BeliefStore& store, const Viewpoint& v, std::string_view agent);

enum class RenderFormat { Ascii, Structured, Json };

/// Ascii draws nested boxes with the topic top-left, holder bottom-left and
/// attitude bottom-right. Structured emits the scenario DSL that rebuilds the
/// store. Json is a machine-readable dump.
std::string render(const BeliefStore& store, RenderFormat format);
std::string render(const BeliefStore& store, const Viewpoint& v, RenderFormat format);

}  // namespace nestbelief
