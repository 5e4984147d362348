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

#include "nestbelief/speech_acts.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "nestbelief/errors.hpp"
#include "store_gen.hpp"

namespace nestbelief {
namespace {

using nbtest::GF;
constexpr auto kBelief = AttitudeType::Belief;
constexpr auto kGoal = AttitudeType::Goal;
constexpr auto kIntention = AttitudeType::Intention;

ActInstance inform_coffee() { return {"inform", "S", "H", Proposition(nbtest::GT("on(coffee,stove)"))}; }

// The speaker's store just before telling the hearer about the coffee.
BeliefStore speaker_before() {
  BeliefStore s("S");
  s = assert_attitude(s, {}, kBelief, GF("on(coffee,stove)"));
  s = assert_attitude(s, {}, kGoal, GF("believe(H,on(coffee,stove))"));
  return assert_attitude(s, {}, kIntention, Formula(inform_coffee().term()));
}

std::vector<Formula> schema_formulas(std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse_formula(t));
  return out;
}

TEST(Preconditions, Inform) {
  EXPECT_EQ(resolve_preconditions(ActLibrary::builtin(), "inform"),
            schema_formulas({"believe(Speaker,Proposition)",
                             "goal(Speaker,believe(Hearer,Proposition))"}));
}

TEST(Preconditions, CorrectionAddsToInform) {
  EXPECT_EQ(resolve_preconditions(ActLibrary::builtin(), "correction"),
            schema_formulas({"believe(Speaker,Proposition)",
                             "goal(Speaker,believe(Hearer,Proposition))",
                             "believe(Speaker,believe(Hearer,not(Proposition)))"}));
}

TEST(Preconditions, EmptyAct) {
  ActLibrary lib;
  lib.add({"nod", ActClass::Answer, std::nullopt, {}});
  EXPECT_TRUE(resolve_preconditions(lib, "nod").empty());
}

TEST(Preconditions, Errors) {
  EXPECT_THROW(resolve_preconditions(ActLibrary::builtin(), "shout"), UnknownActError);
  ActLibrary lib;
  lib.add({"a", ActClass::Inform, "b", {}});
  lib.add({"b", ActClass::Inform, "a", {}});
  EXPECT_THROW(resolve_preconditions(lib, "a"), CycleError);
  ActLibrary orphan;
  orphan.add({"a", ActClass::Inform, "missing", {}});
  EXPECT_THROW(resolve_preconditions(orphan, "a"), UnknownActError);
}

TEST(Preconditions, MustBeSpeakerAttitudes) {
  ActLibrary lib;
  EXPECT_THROW(lib.add({"x", ActClass::Inform, std::nullopt, schema_formulas({"on(a,b)"})}), Error);
  EXPECT_THROW(
      lib.add({"x", ActClass::Inform, std::nullopt, schema_formulas({"believe(Hearer,P)"})}),
      Error);
  EXPECT_TRUE(lib.empty());
}

TEST(Library, TwentyActsInFourClasses) {
  const ActLibrary& lib = ActLibrary::builtin();
  EXPECT_EQ(lib.size(), 20u);
  std::set<ActClass> classes;
  for (const ActSchema* s : lib.schemas()) {
    classes.insert(s->act_class);
    if (s->parent) EXPECT_EQ(lib.find(*s->parent)->act_class, s->act_class) << s->name;
  }
  EXPECT_EQ(classes.size(), 4u);
}

TEST(Library, InheritanceMonotone) {
  const ActLibrary& lib = ActLibrary::builtin();
  for (const ActSchema* s : lib.schemas()) {
    if (!s->parent) continue;
    const auto child = resolve_preconditions(lib, s->name);
    const auto parent = resolve_preconditions(lib, *s->parent);
    ASSERT_GE(child.size(), parent.size());
    EXPECT_TRUE(std::equal(parent.begin(), parent.end(), child.begin())) << s->name;
  }
}

// Random acyclic libraries: every act's list starts with its parent's.
TEST(LibraryProperty, InheritanceMonotoneRandom) {
  std::mt19937 rng(301);
  const auto pool = schema_formulas({"believe(Speaker,Proposition)", "goal(Speaker,done(Hearer))",
                                     "believe(Speaker,able(Hearer,Proposition))",
                                     "goal(Speaker,believe(Hearer,Proposition))"});
  for (int i = 0; i < 100; ++i) {
    ActLibrary lib;
    const int n = nbtest::uniform(rng, 1, 6);
    for (int k = 0; k < n; ++k) {
      ActSchema s{"a" + std::to_string(k), ActClass::Inform, std::nullopt, {}};
      if (k > 0 && nbtest::uniform(rng, 0, 2)) {
        s.parent = "a" + std::to_string(nbtest::uniform(rng, 0, k - 1));
      }
      for (int j = nbtest::uniform(rng, 0, 2); j > 0; --j) {
        s.own_preconditions.push_back(nbtest::pick(rng, pool));
      }
      lib.add(s);
    }
    for (const ActSchema* s : lib.schemas()) {
      const auto mine = resolve_preconditions(lib, s->name);
      EXPECT_EQ(std::set<Formula>(mine.begin(), mine.end()).size(), mine.size());
      if (!s->parent) continue;
      const auto parent = resolve_preconditions(lib, *s->parent);
      EXPECT_TRUE(std::equal(parent.begin(), parent.end(), mine.begin()));
    }
  }
}

TEST(Felicity, Cases) {
  EXPECT_TRUE(check_felicity(speaker_before(), inform_coffee()).felicitous());
  const Felicity none = check_felicity(BeliefStore("S"), inform_coffee());
  EXPECT_EQ(none.missing.size(), 2u);
  BeliefStore only_belief = assert_attitude(BeliefStore("S"), {}, kBelief, GF("on(coffee,stove)"));
  EXPECT_EQ(check_felicity(only_belief, inform_coffee()).missing,
            std::vector<Formula>{GF("goal(S,believe(H,on(coffee,stove)))")});
  ActInstance bad = inform_coffee();
  bad.act = "mumble";
  EXPECT_THROW(check_felicity(only_belief, bad), UnknownActError);
}

TEST(ActInstance, FromTerm) {
  const ActInstance a = ActInstance::from_term(nbtest::GT("inform(S,H,on(coffee,stove))"));
  EXPECT_EQ(a, inform_coffee());
  EXPECT_EQ(a.term(), nbtest::GT("inform(S,H,on(coffee,stove))"));
  EXPECT_THROW(ActInstance::from_term(nbtest::GT("inform(S,S,p)")), Error);
  EXPECT_THROW(ActInstance::from_term(nbtest::GT("inform(S,p)")), Error);
}

TEST(SpeakerUpdate, InformToCoffeeStove) {
  UpdateReport r = speaker_update(speaker_before(), inform_coffee());
  EXPECT_TRUE(r.intention_dropped);
  EXPECT_TRUE(r.store.entries({}, kIntention).empty());
  EXPECT_EQ(holds(r.store, {}, kGoal, GF("believe(H,on(coffee,stove))")), Status::Holds);
  // Both conditions unfold below the hearer's environment.
  EXPECT_EQ(r.store.entries({"H", "S"}, kBelief), std::set<Formula>{GF("on(coffee,stove)")});
  EXPECT_EQ(r.store.entries({"H", "S"}, kGoal), std::set<Formula>{GF("believe(H,on(coffee,stove))")});
  EXPECT_EQ(holds(r.store, {}, kBelief, GF("believe(H,goal(S,believe(H,on(coffee,stove))))")),
            Status::Holds);
  for (const auto& c : r.conditions) EXPECT_EQ(c.outcome.result, AscriptionResult::Ascribed);
}

TEST(SpeakerUpdate, ZeroConditionsOnlyDropIntention) {
  BeliefStore s = speaker_before();
  ActLibrary lib;
  lib.add({"inform", ActClass::Inform, std::nullopt, {}});
  s = s.with_acts(lib);
  UpdateReport r = speaker_update(s, inform_coffee());
  EXPECT_TRUE(r.conditions.empty());
  EXPECT_EQ(r.store, retract_attitude(s, {}, kIntention, Formula(inform_coffee().term())));
}

TEST(SpeakerUpdate, BlockedConditionSkipped) {
  BeliefStore s =
      assert_attitude(speaker_before(), {"H"}, kBelief, GF("not(believe(S,on(coffee,stove)))"));
  UpdateReport r = speaker_update(s, inform_coffee());
  // Oracle: each condition default-ascribed on its own, in order.
  BeliefStore expected = s;
  ASSERT_EQ(r.conditions.size(), 2u);
  for (const auto& c : r.conditions) {
    Ascription a = default_ascribe(expected, {}, "H", c.condition);
    EXPECT_EQ(a.outcome, c.outcome);
    expected = a.store;
  }
  expected = retract_attitude(expected, {}, kIntention, Formula(inform_coffee().term()));
  EXPECT_EQ(r.store, expected);
  EXPECT_EQ(r.conditions[0].outcome.result, AscriptionResult::Blocked);
  EXPECT_EQ(r.conditions[1].outcome.result, AscriptionResult::Ascribed);
}

TEST(SpeakerUpdate, InfelicitousStillUpdates) {
  UpdateReport r = speaker_update(BeliefStore("S"), inform_coffee());
  EXPECT_FALSE(r.intention_dropped);
  EXPECT_EQ(holds(r.store, {"H", "S"}, kBelief, GF("on(coffee,stove)")), Status::Holds);
}

TEST(HearerUpdate, InformObserved) {
  UpdateReport r = hearer_update(BeliefStore("H"), inform_coffee());
  EXPECT_EQ(holds(r.store, {}, kBelief, GF("believe(S,on(coffee,stove))")), Status::Holds);
  EXPECT_EQ(holds(r.store, {}, kBelief, GF("goal(S,believe(H,on(coffee,stove)))")), Status::Holds);
  EXPECT_EQ(holds(r.store, {}, kBelief, GF("on(coffee,stove)")), Status::Unknown);
  EXPECT_EQ(holds(r.store, {"S"}, kBelief, GF("on(coffee,stove)")), Status::Holds);
}

TEST(HearerUpdate, ZeroConditionsNoChange) {
  ActLibrary lib;
  lib.add({"inform", ActClass::Inform, std::nullopt, {}});
  const BeliefStore s = BeliefStore("H").with_acts(lib);
  EXPECT_EQ(hearer_update(s, inform_coffee()).store, s);
}

TEST(HearerUpdate, NestedBase) {
  // System models John as the hearer.
  UpdateReport r = hearer_update(BeliefStore{}, {"inform", "Mary", "John", Proposition(nbtest::GT("p"))},
                                 Viewpoint{"John"});
  EXPECT_EQ(holds(r.store, {"John", "Mary"}, kBelief, GF("p")), Status::Holds);
}

// ---------------------------------------------------------------------------
// Properties.

Formula random_content(std::mt19937& rng) {
  static const std::vector<std::string> atoms{"on(coffee,stove)", "hot(tea)", "open(door)",
                                              "isa(pneumonia,bacteria)"};
  Formula f = GF(nbtest::pick(rng, atoms));
  return nbtest::uniform(rng, 0, 2) == 0 ? negate(f) : f;
}

// Speaker-side environments under the Hearer are exactly the hearer-side
// environments, one level deeper.
TEST(UpdateProperty, SpeakerSideIsOneLevelDeeper) {
  std::mt19937 rng(302);
  for (int i = 0; i < 200; ++i) {
    const ActSchema* schema = nbtest::pick(rng, ActLibrary::builtin().schemas());
    const ActInstance act{schema->name, "Sam", "Hal", Proposition(random_content(rng).term())};
    const UpdateReport spk = speaker_update(BeliefStore("Sam"), act);
    const UpdateReport hrr = hearer_update(BeliefStore("Hal"), act);
    ASSERT_EQ(spk.conditions.size(), hrr.conditions.size());
    for (std::size_t k = 0; k < spk.conditions.size(); ++k) {
      EXPECT_EQ(spk.conditions[k].written,
                Formula::attitude(kBelief, Term::constant("Hal"), hrr.conditions[k].written));
      EXPECT_EQ(spk.conditions[k].written.depth(), hrr.conditions[k].written.depth() + 1);
    }
    std::size_t seen = 0;
    for (const auto& [key, entries] : spk.store.environments()) {
      ASSERT_FALSE(key.viewpoint.empty());
      EXPECT_EQ(key.viewpoint.hops().front().agent, "Hal");
      std::vector<Hop> rest(key.viewpoint.hops().begin() + 1, key.viewpoint.hops().end());
      EXPECT_EQ(hrr.store.entries(EnvKey{Viewpoint(rest), key.attitude}), entries)
          << schema->name;
      ++seen;
    }
    EXPECT_EQ(seen, hrr.store.environments().size()) << schema->name;
  }
}

TEST(UpdateProperty, InformLeavesHearerContentAlone) {
  std::mt19937 rng(303);
  for (int i = 0; i < 150; ++i) {
    const BeliefStore s = nbtest::random_store(rng);
    const Formula p = random_content(rng);
    const ActInstance act{"inform", "John", "System", Proposition(p.term())};
    const UpdateReport r = hearer_update(s, act);
    EXPECT_EQ(holds(r.store, {}, kBelief, p), holds(s, {}, kBelief, p));
  }
}

TEST(UpdateProperty, SpeakerDropsExactlyTheIntention) {
  std::mt19937 rng(304);
  for (int i = 0; i < 150; ++i) {
    BeliefStore s = nbtest::random_store(rng);
    const ActSchema* schema = nbtest::pick(rng, ActLibrary::builtin().schemas());
    const ActInstance act{schema->name, "System", nbtest::pick(rng, nbtest::agents()),
                          Proposition(random_content(rng).term())};
    s = assert_attitude(s, {}, kIntention, Formula(act.term()));
    std::set<Formula> intentions = s.entries({}, kIntention);
    intentions.erase(Formula(act.term()));
    const UpdateReport r = speaker_update(s, act);
    EXPECT_TRUE(r.intention_dropped);
    EXPECT_EQ(r.store.entries({}, kIntention), intentions);
    EXPECT_EQ(r.store.entries({}, kGoal), s.entries({}, kGoal));
  }
}

}  // namespace
}  // namespace nestbelief
