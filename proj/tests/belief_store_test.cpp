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

#include <gtest/gtest.h>

#include "json.hpp"
#include "nestbelief/errors.hpp"
#include "nestbelief/scenario.hpp"
#include "store_gen.hpp"

namespace nestbelief {
namespace {

using nbtest::GF;
constexpr auto kBelief = AttitudeType::Belief;
constexpr auto kGoal = AttitudeType::Goal;
constexpr auto kIntention = AttitudeType::Intention;

TEST(BeliefStore, AssertAtRoot) {
  BeliefStore s = assert_attitude(BeliefStore{}, {}, kBelief, GF("isa(Car,Wreck)"));
  EXPECT_EQ(s.entries({}, kBelief), std::set<Formula>{GF("isa(Car,Wreck)")});
  EXPECT_EQ(holds(s, {}, kBelief, GF("isa(Car,Wreck)")), Status::Holds);
}

TEST(BeliefStore, AssertIsIdempotent) {
  BeliefStore once = assert_attitude(BeliefStore{}, {}, kBelief, GF("p(a)"));
  EXPECT_EQ(assert_attitude(once, {}, kBelief, GF("p(a)")), once);
}

TEST(BeliefStore, ContradictionRaises) {
  BeliefStore s = assert_attitude(BeliefStore{}, {"John"}, kBelief, GF("p(a)"));
  EXPECT_THROW(assert_attitude(s, {"John"}, kBelief, GF("not(p(a))")), ConsistencyError);
  // Other environments are independent.
  EXPECT_NO_THROW(assert_attitude(s, {}, kBelief, GF("not(p(a))")));
  EXPECT_NO_THROW(assert_attitude(s, {"John"}, kGoal, GF("not(p(a))")));
}

TEST(BeliefStore, NonGroundRejected) {
  EXPECT_THROW(assert_attitude(BeliefStore{}, {}, kBelief, Formula(nbtest::ST("p(X)"))),
               PreconditionError);
}

TEST(BeliefStore, BeliefAttitudesUnfold) {
  BeliefStore s = assert_attitude(BeliefStore{}, {}, kBelief, GF("believe(John, round(world))"));
  EXPECT_EQ(s.entries({"John"}, kBelief), std::set<Formula>{GF("round(world)")});
  EXPECT_EQ(holds(s, {"John"}, kBelief, GF("round(world)")), Status::Holds);
  EXPECT_EQ(holds(s, {}, kBelief, GF("believe(John, round(world))")), Status::Holds);
  // A goal of John's lives in John's goal space.
  s = assert_attitude(s, {}, kBelief, GF("goal(John, hot(tea))"));
  EXPECT_EQ(s.entries({"John"}, kGoal), std::set<Formula>{GF("hot(tea)")});
}

TEST(BeliefStore, NegatedAttitudeIsLiteral) {
  BeliefStore s = assert_attitude(BeliefStore{}, {}, kBelief, GF("not(believe(John, p))"));
  EXPECT_EQ(s.entries({}, kBelief), std::set<Formula>{GF("not(believe(John, p))")});
  EXPECT_EQ(holds(s, {}, kBelief, GF("believe(John, p)")), Status::Contrary);
  EXPECT_THROW(assert_attitude(s, {}, kBelief, GF("believe(John, p)")), ConsistencyError);
}

TEST(BeliefStore, OuterNegatedAttitudeDeniesInnerEntry) {
  BeliefStore s = assert_attitude(BeliefStore{}, {}, kBelief, GF("not(believe(John, p))"));
  EXPECT_EQ(holds(s, {"John"}, kBelief, GF("p")), Status::Contrary);
  EXPECT_THROW(assert_attitude(s, {"John"}, kBelief, GF("p")), ConsistencyError);
  // The holder's own space works the same way, in either order.
  BeliefStore t = assert_attitude(BeliefStore{}, {"Mary"}, kBelief, GF("not(believe(Mary, p))"));
  EXPECT_THROW(assert_attitude(t, {"Mary"}, kBelief, GF("p")), ConsistencyError);
  t = assert_attitude(BeliefStore{}, {"Mary"}, kBelief, GF("p"));
  EXPECT_THROW(assert_attitude(t, {"Mary"}, kBelief, GF("not(believe(Mary, p))")),
               ConsistencyError);
  // Goals too.
  BeliefStore g = assert_attitude(BeliefStore{}, {}, kBelief, GF("not(goal(John, p))"));
  EXPECT_THROW(assert_attitude(g, {"John"}, kGoal, GF("p")), ConsistencyError);
  EXPECT_NO_THROW(assert_attitude(g, {"John"}, kBelief, GF("p")));
}

TEST(BeliefStore, RetractInvertsAssert) {
  const BeliefStore base = assert_attitude(BeliefStore{}, {}, kBelief, GF("q"));
  const Formula act = GF("inform(Speaker, Hearer, on(coffee, stove))");
  BeliefStore s = assert_attitude(base, {}, kIntention, act);
  EXPECT_EQ(retract_attitude(s, {}, kIntention, act), base);
  EXPECT_TRUE(retract_attitude(s, {}, kIntention, act).entries({}, kIntention).empty());
  EXPECT_EQ(retract_attitude(base, {"John"}, kBelief, GF("absent")), base);
}

TEST(BeliefStore, HoldsTriState) {
  BeliefStore s;
  EXPECT_EQ(holds(s, {}, kBelief, GF("flat(world)")), Status::Unknown);
  s = assert_attitude(s, {"John"}, kBelief, GF("not(flat(world))"));
  EXPECT_EQ(holds(s, {"John"}, kBelief, GF("flat(world)")), Status::Contrary);
  EXPECT_EQ(holds(s, {"John"}, kBelief, GF("not(flat(world))")), Status::Holds);
}

TEST(BeliefStore, ViewpointRules) {
  BeliefStore s;
  EXPECT_THROW(s.validate(Viewpoint({{"John", kGoal}, {"Mary", kBelief}})), ViewpointError);
  EXPECT_THROW(s.validate(Viewpoint{"John", "John"}), ViewpointError);
  EXPECT_THROW(s.validate(Viewpoint{"System"}), ViewpointError);
  EXPECT_NO_THROW(s.validate(Viewpoint({{"John", kBelief}, {"Mary", kGoal}})));
  EXPECT_THROW(s.validate(Viewpoint{"A", "B", "A", "B", "A", "B"}), DepthError);
  EXPECT_NO_THROW(s.validate(Viewpoint{"A", "B", "A", "B", "A"}));
  EXPECT_NO_THROW(s.with_max_depth(6).validate(Viewpoint{"A", "B", "A", "B", "A", "B"}));
  EXPECT_EQ(s.address(Viewpoint({{"John", kGoal}}), kBelief), (EnvKey{{"John"}, kGoal}));
}

TEST(BeliefStore, EmptyEnvironmentsVanish) {
  BeliefStore s = assert_attitude(BeliefStore{}, {"John", "Mary"}, kBelief, GF("p"));
  EXPECT_EQ(s.child_agents({}), std::set<std::string>{"John"});
  s = retract_attitude(s, {"John", "Mary"}, kBelief, GF("p"));
  EXPECT_TRUE(s.environments().empty());
  EXPECT_TRUE(s.subtree_empty({}));
}

TEST(Render, NestedBoxes) {
  BeliefStore s = assert_attitude(BeliefStore{}, {}, kBelief, GF("round(world)"));
  s = assert_attitude(s, {"John"}, kBelief, GF("round(world)"));
  EXPECT_EQ(render(s, RenderFormat::Ascii),
            "+------------------+\n"
            "| round(world)     |\n"
            "| +--------------+ |\n"
            "| | round(world) | |\n"
            "| | John  Belief | |\n"
            "| +--------------+ |\n"
            "| System    Belief |\n"
            "+------------------+\n");
}

TEST(Render, EmptyStoreIsOneBox) {
  const std::string out = render(BeliefStore{}, RenderFormat::Ascii);
  EXPECT_EQ(out,
            "+---------------+\n"
            "| System Belief |\n"
            "+---------------+\n");
}

TEST(Render, TopicOnTopBorder) {
  BeliefStore s = assert_attitude(BeliefStore{}, {}, kBelief, GF("round(world)"));
  s = s.with_topic({{}, kBelief}, "world");
  EXPECT_EQ(render(s, RenderFormat::Ascii).substr(0, 10), "+-world---");
}

TEST(Render, JsonIsParseable) {
  BeliefStore s = assert_attitude(BeliefStore{}, {"John"}, kBelief, GF("round(world)"));
  const auto j = nlohmann::json::parse(render(s, RenderFormat::Json));
  EXPECT_EQ(j["owner"], "System");
  ASSERT_EQ(j["environments"].size(), 1u);
  EXPECT_EQ(j["environments"][0]["holder"], "John");
  EXPECT_EQ(j["environments"][0]["entries"][0], "round(world)");
}

// ---------------------------------------------------------------------------
// Properties over random stores.

bool locally_consistent(const BeliefStore& s) {
  for (const auto& [key, entries] : s.environments()) {
    for (const Formula& f : entries) {
      if (entries.contains(negate(f))) return false;
    }
  }
  return true;
}

TEST(BeliefStoreProperty, ReachableStoresAreConsistent) {
  std::mt19937 rng(101);
  for (int i = 0; i < 150; ++i) {
    BeliefStore s = nbtest::random_store(rng, 20);
    EXPECT_TRUE(locally_consistent(s));
    for (const auto& [key, entries] : s.environments()) {
      EXPECT_FALSE(entries.empty());
      EXPECT_NO_THROW(s.validate(key.viewpoint));
      for (const Formula& f : entries) EXPECT_TRUE(f.is_ground());
    }
  }
}

// Re-asserting a reachable store's entries in any order never conflicts and
// gives an equivalent store (entries implied by others may not be stored).
TEST(BeliefStoreProperty, AssertOrderDoesNotMatter) {
  std::mt19937 rng(105);
  for (int i = 0; i < 120; ++i) {
    const BeliefStore s = nbtest::random_store(rng, 20);
    std::vector<std::pair<EnvKey, Formula>> items;
    for (const auto& [key, entries] : s.environments()) {
      for (const Formula& f : entries) items.emplace_back(key, f);
    }
    std::shuffle(items.begin(), items.end(), rng);
    BeliefStore t;
    for (const auto& [key, f] : items) {
      ASSERT_NO_THROW(t = assert_attitude(t, key.viewpoint, key.attitude, f)) << to_string(f);
    }
    for (const auto& [key, f] : items) {
      EXPECT_EQ(holds(t, key.viewpoint, key.attitude, f), Status::Holds) << to_string(f);
    }
    for (const auto& [key, entries] : t.environments()) {
      for (const Formula& f : entries) {
        EXPECT_EQ(holds(s, key.viewpoint, key.attitude, f), Status::Holds) << to_string(f);
      }
    }
  }
}

TEST(BeliefStoreProperty, AssertRetractInverse) {
  std::mt19937 rng(102);
  int exercised = 0;
  for (int i = 0; i < 200; ++i) {
    const BeliefStore s = nbtest::random_store(rng);
    const Viewpoint v = nbtest::random_viewpoint(rng, 2);
    const Formula f = nbtest::random_atom(rng);
    const AttitudeType at = nbtest::random_attitude(rng);
    if (holds(s, v, at, f) != Status::Unknown) continue;
    ++exercised;
    const BeliefStore t = assert_attitude(s, v, at, f);
    EXPECT_EQ(holds(t, v, at, f), Status::Holds);
    EXPECT_EQ(retract_attitude(t, v, at, f), s);
  }
  EXPECT_GT(exercised, 100);
}

TEST(BeliefStoreProperty, HoldsIsPure) {
  std::mt19937 rng(103);
  for (int i = 0; i < 100; ++i) {
    const BeliefStore s = nbtest::random_store(rng);
    const BeliefStore copy = s;
    for (int k = 0; k < 5; ++k) {
      holds(s, nbtest::random_viewpoint(rng, 3), nbtest::random_attitude(rng),
            nbtest::random_formula(rng));
    }
    EXPECT_EQ(s, copy);
  }
}

TEST(BeliefStoreProperty, StructuredRenderRoundTrips) {
  std::mt19937 rng(104);
  for (int i = 0; i < 60; ++i) {
    const BeliefStore s = nbtest::random_store(rng);
    const std::string text = render(s, RenderFormat::Structured);
    const BeliefStore back = load_store(text);
    EXPECT_EQ(back, s) << text;
    EXPECT_EQ(render(back, RenderFormat::Structured), text);
  }
}

}  // namespace
}  // namespace nestbelief
