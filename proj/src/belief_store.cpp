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

#include "nestbelief/belief_store.hpp"

#include "nestbelief/errors.hpp"

namespace nestbelief {

Viewpoint::Viewpoint(std::initializer_list<std::string_view> belief_agents) {
  for (std::string_view a : belief_agents) hops_.push_back(Hop{std::string(a)});
}

Viewpoint Viewpoint::child(std::string agent, AttitudeType at) const {
  Viewpoint v = *this;
  v.hops_.push_back(Hop{std::move(agent), at});
  return v;
}

Viewpoint Viewpoint::prefix(std::size_t n) const {
  Viewpoint v;
  v.hops_.assign(hops_.begin(), hops_.begin() + static_cast<std::ptrdiff_t>(std::min(n, depth())));
  return v;
}

std::string to_string(const Viewpoint& v, std::string_view owner) {
  std::string out(owner);
  for (const Hop& h : v.hops()) {
    out += " > ";
    out += h.agent;
    if (h.attitude != AttitudeType::Belief) {
      out += ' ';
      out += to_string(h.attitude);
    }
  }
  return out;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Contrary: return "contrary";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

BeliefStore::BeliefStore(std::string owner, std::size_t max_depth)
    : owner_(std::move(owner)), max_depth_(max_depth), acts_(ActLibrary::builtin()) {}

BeliefStore BeliefStore::with_max_depth(std::size_t depth) const {
  BeliefStore s = *this;
  s.max_depth_ = depth;
  return s;
}

const std::string& BeliefStore::holder(const Viewpoint& v) const {
  return v.empty() ? owner_ : v.hops().back().agent;
}

void BeliefStore::validate(const Viewpoint& v) const {
  const std::string* prev = &owner_;
  for (std::size_t i = 0; i < v.depth(); ++i) {
    const Hop& h = v.hops()[i];
    if (h.agent.empty()) throw ViewpointError("empty agent name in viewpoint");
    if (i + 1 < v.depth() && h.attitude != AttitudeType::Belief) {
      throw ViewpointError("only belief spaces nest: " + to_string(v, owner_));
    }
    if (h.agent == *prev) {
      throw ViewpointError("agent nested directly inside itself: " + to_string(v, owner_));
    }
    prev = &h.agent;
  }
  if (v.depth() > max_depth_) {
    throw DepthError("viewpoint " + to_string(v, owner_) + " exceeds max depth " +
                     std::to_string(max_depth_));
  }
}

EnvKey BeliefStore::address(const Viewpoint& v, AttitudeType at) const {
  validate(v);
  if (!v.empty() && v.hops().back().attitude != AttitudeType::Belief) {
    AttitudeType hop_at = v.hops().back().attitude;
    if (at != AttitudeType::Belief && at != hop_at) {
      throw ViewpointError("attitude " + std::string(to_string(at)) + " conflicts with final hop " +
                           to_string(v, owner_));
    }
    std::vector<Hop> hops = v.hops();
    hops.back().attitude = AttitudeType::Belief;
    return EnvKey{Viewpoint(std::move(hops)), hop_at};
  }
  return EnvKey{v, at};
}

const std::set<Formula>& BeliefStore::entries(const EnvKey& key) const {
  static const std::set<Formula> kEmpty;
  auto it = envs_.find(key);
  return it == envs_.end() ? kEmpty : it->second;
}

std::set<std::string> BeliefStore::child_agents(const Viewpoint& v) const {
  std::set<std::string> out;
  for (const auto& [key, entries] : envs_) {
    const auto& hops = key.viewpoint.hops();
    if (hops.size() <= v.depth() || entries.empty()) continue;
    if (key.viewpoint.prefix(v.depth()) == v) out.insert(hops[v.depth()].agent);
  }
  return out;
}

bool BeliefStore::subtree_empty(const Viewpoint& v) const {
  for (const auto& [key, entries] : envs_) {
    if (!entries.empty() && key.viewpoint.depth() >= v.depth() &&
        key.viewpoint.prefix(v.depth()) == v) {
      return false;
    }
  }
  return true;
}

BeliefStore BeliefStore::with_entry(const EnvKey& key, const Formula& f) const {
  BeliefStore s = *this;
  s.envs_[key].insert(f);
  return s;
}

BeliefStore BeliefStore::without_entry(const EnvKey& key, const Formula& f) const {
  auto it = envs_.find(key);
  if (it == envs_.end() || !it->second.contains(f)) return *this;
  BeliefStore s = *this;
  auto& set = s.envs_[key];
  set.erase(f);
  if (set.empty()) s.envs_.erase(key);
  return s;
}

std::optional<std::string> BeliefStore::topic(const EnvKey& key) const {
  auto it = topics_.find(key);
  if (it == topics_.end()) return std::nullopt;
  return it->second;
}

BeliefStore BeliefStore::with_topic(const EnvKey& key, std::optional<std::string> label) const {
  BeliefStore s = *this;
  if (label) {
    s.topics_[key] = *label;
  } else {
    s.topics_.erase(key);
  }
  return s;
}

BeliefStore BeliefStore::with_stereotype(const std::string& name,
                                         std::set<StereotypeMember> members) const {
  BeliefStore s = *this;
  s.stereotypes_[name] = std::move(members);
  return s;
}

BeliefStore BeliefStore::with_acts(ActLibrary acts) const {
  BeliefStore s = *this;
  s.acts_ = std::move(acts);
  return s;
}

bool operator==(const BeliefStore& a, const BeliefStore& b) {
  return a.owner_ == b.owner_ && a.envs_ == b.envs_ && a.topics_ == b.topics_ &&
         a.stereotypes_ == b.stereotypes_ && a.acts_ == b.acts_;
}

namespace {

Status flip(Status s) {
  switch (s) {
    case Status::Holds: return Status::Contrary;
    case Status::Contrary: return Status::Holds;
    case Status::Unknown: return Status::Unknown;
  }
  return s;
}

// Environment that a positive attitude about `agent` refers to from `v`.
// An agent's attitude about itself stays at the same level.
std::optional<Viewpoint> descend(const BeliefStore& store, const Viewpoint& v, const Term& agent) {
  if (!agent.is_constant()) {
    throw PreconditionError("attitude agent must be a ground symbol: " + to_string(agent));
  }
  if (agent.name() == store.holder(v)) return v;
  if (v.depth() + 1 > store.max_depth()) return std::nullopt;
  return v.child(agent.name());
}

Status eval(const BeliefStore& store, const EnvKey& key, const Formula& f) {
  if (key.attitude == AttitudeType::Belief && f.is_attitude()) {
    if (f.negated()) return flip(eval(store, key, f.positive()));
    if (store.entries(key).contains(negate(f))) return Status::Contrary;
    auto target = descend(store, key.viewpoint, f.agent());
    if (!target) return Status::Unknown;
    return eval(store, EnvKey{*target, f.attitude()}, f.body());
  }
  const auto& entries = store.entries(key);
  if (entries.contains(f)) return Status::Holds;
  if (entries.contains(negate(f))) return Status::Contrary;
  // A negated attitude literal further out can deny this entry too, e.g.
  // not(believe(John,p)) at System against p at System > John.
  const auto& hops = key.viewpoint.hops();
  Formula wrapped = Formula::attitude(key.attitude, Term::constant(store.holder(key.viewpoint)), f);
  auto denied_at = [&](std::size_t depth) {
    return store.entries(EnvKey{key.viewpoint.prefix(depth), AttitudeType::Belief})
        .contains(negate(wrapped));
  };
  if (denied_at(hops.size())) return Status::Contrary;
  for (std::size_t k = hops.size(); k-- > 0;) {
    if (denied_at(k)) return Status::Contrary;
    if (k > 0) {
      wrapped = Formula::attitude(AttitudeType::Belief, Term::constant(hops[k - 1].agent), wrapped);
    }
  }
  return Status::Unknown;
}

std::optional<Location> locate_key(const BeliefStore& store, const EnvKey& key, const Formula& f) {
  if (key.attitude == AttitudeType::Belief && f.is_attitude() && !f.negated()) {
    auto target = descend(store, key.viewpoint, f.agent());
    if (!target) return std::nullopt;
    return locate_key(store, EnvKey{*target, f.attitude()}, f.body());
  }
  return Location{key, f};
}

}  // namespace

std::optional<Location> locate(const BeliefStore& store, const Viewpoint& v, AttitudeType at,
                               const Formula& f) {
  return locate_key(store, store.address(v, at), f);
}

Status holds(const BeliefStore& store, const Viewpoint& v, AttitudeType at, const Formula& f) {
  EnvKey key;
  try {
    key = store.address(v, at);
  } catch (const DepthError&) {
    return Status::Unknown;
  }
  return eval(store, key, f);
}

BeliefStore assert_attitude(const BeliefStore& store, const Viewpoint& v, AttitudeType at,
                            const Formula& f) {
  if (!f.is_ground()) throw PreconditionError("stored attitudes must be ground: " + to_string(f));
  EnvKey key = store.address(v, at);
  switch (eval(store, key, f)) {
    case Status::Holds: return store;
    case Status::Contrary:
      throw ConsistencyError("cannot assert " + to_string(f, Syntax::Ground) + " at " +
                             to_string(key.viewpoint, store.owner()) + " " +
                             std::string(to_string(key.attitude)) + ": its negation is present");
    case Status::Unknown: break;
  }
  auto loc = locate_key(store, key, f);
  if (!loc) {
    throw DepthError("asserting " + to_string(f, Syntax::Ground) + " at " +
                     to_string(key.viewpoint, store.owner()) + " exceeds max depth " +
                     std::to_string(store.max_depth()));
  }
  return store.with_entry(loc->key, loc->literal);
}

BeliefStore retract_attitude(const BeliefStore& store, const Viewpoint& v, AttitudeType at,
                             const Formula& f) {
  std::optional<Location> loc;
  try {
    loc = locate(store, v, at, f);
  } catch (const DepthError&) {
    return store;
  } catch (const PreconditionError&) {
    return store;
  }
  if (!loc) return store;
  return store.without_entry(loc->key, loc->literal);
}

Formula trust_formula(std::string_view agent) {
  return Formula(Term::compound("trustworthy", {Term::constant(std::string(agent))}));
}

BeliefStore assert_trust(const BeliefStore& store, const Viewpoint& v, std::string_view agent) {
  return assert_attitude(store, v, AttitudeType::Belief, trust_formula(agent));
}

}  // namespace nestbelief
