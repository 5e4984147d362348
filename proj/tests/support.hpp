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

// Test-side helpers and oracles. Nothing here calls into the planner or the
// belief store logic being checked; the oracles re-derive answers from
// scratch.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nestbelief/formula.hpp"
#include "nestbelief/planner.hpp"
#include "nestbelief/term.hpp"

namespace nbtest {

using nestbelief::Formula;
using nestbelief::Operator;
using nestbelief::Plan;
using nestbelief::Syntax;
using nestbelief::Term;

inline Term C(const std::string& name) { return Term::constant(name); }
inline Term V(const std::string& name) { return Term::variable(name); }
inline Term T(const std::string& name, std::vector<Term> args) {
  return Term::compound(name, std::move(args));
}
inline Term GT(std::string_view text) { return nestbelief::parse_term(text, Syntax::Ground); }
inline Term ST(std::string_view text) { return nestbelief::parse_term(text, Syntax::Schema); }
inline Formula GF(std::string_view text) { return nestbelief::parse_formula(text, Syntax::Ground); }

inline Operator op(std::string name, std::vector<Term> params, std::vector<Term> pre,
                   std::vector<Term> add, std::vector<Term> del = {}) {
  return Operator{std::move(name), std::move(params), std::move(pre), std::move(add),
                  std::move(del), false};
}

template <class T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}
inline int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// ---------------------------------------------------------------------------
// Brute-force STRIPS.

using State = std::set<Term>;

struct GroundAction {
  Term head;
  std::vector<Term> pre, add, del;
};

// Plain substitution, written independently of nestbelief::substitute.
inline Term bind_vars(const Term& t, const std::map<std::string, Term>& b) {
  if (t.kind() == Term::Kind::Variable) {
    auto it = b.find(t.name());
    return it == b.end() ? t : it->second;
  }
  if (t.kind() == Term::Kind::Constant) return t;
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(bind_vars(a, b));
  return Term::compound(t.name(), std::move(args));
}

inline GroundAction ground_with(const Operator& o, const std::map<std::string, Term>& b) {
  GroundAction g{bind_vars(o.head(), b), {}, {}, {}};
  for (const Term& t : o.preconditions) g.pre.push_back(bind_vars(t, b));
  for (const Term& t : o.add) g.add.push_back(bind_vars(t, b));
  for (const Term& t : o.del) g.del.push_back(bind_vars(t, b));
  return g;
}

// Every instance of every operator whose parameters are plain variables.
inline std::vector<GroundAction> ground_all(const std::vector<Operator>& ops,
                                            const std::vector<Term>& constants) {
  std::vector<GroundAction> out;
  for (const Operator& o : ops) {
    std::vector<std::string> vars;
    for (const Term& p : o.params) {
      if (p.kind() == Term::Kind::Variable &&
          std::find(vars.begin(), vars.end(), p.name()) == vars.end()) {
        vars.push_back(p.name());
      }
    }
    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
      std::map<std::string, Term> b;
      for (std::size_t i = 0; i < vars.size(); ++i) b.emplace(vars[i], constants[idx[i]]);
      GroundAction g = ground_with(o, b);
      bool ground = g.head.is_ground();
      for (const Term& t : g.pre) ground = ground && t.is_ground();
      if (ground) out.push_back(std::move(g));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == constants.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return out;
}

inline bool applicable(const State& s, const GroundAction& a) {
  for (const Term& p : a.pre) {
    if (!s.contains(p)) return false;
  }
  return true;
}

inline State apply_action(State s, const GroundAction& a) {
  for (const Term& d : a.del) s.erase(d);
  for (const Term& d : a.add) s.insert(d);
  return s;
}

inline bool satisfies(const State& s, const std::vector<Term>& goals) {
  for (const Term& g : goals) {
    if (!s.contains(g)) return false;
  }
  return true;
}

// Length of the shortest sequential plan, or nullopt if none within
// max_len. With max_len = SIZE_MAX the whole reachable space is explored.
inline std::optional<std::size_t> bfs_shortest(const std::vector<Term>& initial,
                                               const std::vector<Term>& goals,
                                               const std::vector<GroundAction>& actions,
                                               std::size_t max_len) {
  State start(initial.begin(), initial.end());
  std::map<State, std::size_t> seen{{start, 0}};
  std::deque<State> queue{start};
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    const std::size_t d = seen[s];
    if (satisfies(s, goals)) return d;
    if (d == max_len) continue;
    for (const GroundAction& a : actions) {
      if (!applicable(s, a)) continue;
      State n = apply_action(s, a);
      if (seen.emplace(n, d + 1).second) queue.push_back(std::move(n));
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Plan validity over every linearization.

struct Validity {
  bool ok = true;
  std::string why;
  std::size_t linearizations = 0;
};

// Re-derives each step's effects from the domain operator of the same name
// and checks every total order compatible with the plan's orderings.
inline Validity check_plan(const Plan& plan, const std::vector<Term>& initial,
                           const std::vector<Term>& goals, const std::vector<Operator>& domain,
                           std::size_t cap = 200000) {
  Validity v;
  const int n = static_cast<int>(plan.steps.size());
  std::map<int, GroundAction> acts;
  for (int id = 2; id < n; ++id) {
    const Term head = plan.instance(id);
    if (!head.is_ground()) return {false, "step " + to_string(head) + " is not ground", 0};
    bool found = false;
    for (const Operator& o : domain) {
      if (o.name != head.name() || o.params.size() != head.arity()) continue;
      std::map<std::string, Term> b;
      bool match = true;
      for (std::size_t i = 0; i < o.params.size() && match; ++i) {
        const Term& p = o.params[i];
        const Term& a = head.args()[i];
        if (p.kind() == Term::Kind::Variable) {
          auto [it, fresh] = b.emplace(p.name(), a);
          match = fresh || it->second == a;
        } else {
          match = p == a;
        }
      }
      if (!match) continue;
      acts.emplace(id, ground_with(o, b));
      found = true;
      break;
    }
    if (!found) return {false, "no operator for " + to_string(head), 0};
  }

  // Direct predecessors from the ordering set; start and finish are implicit.
  std::vector<std::set<int>> before(n);
  for (const auto& [a, b] : plan.ordering) {
    if (a >= 2 && b >= 2) before[b].insert(a);
  }

  std::vector<int> order;
  std::vector<bool> used(n, false);
  std::function<void()> walk = [&] {
    if (!v.ok || v.linearizations >= cap) return;
    if (static_cast<int>(order.size()) == n - 2) {
      ++v.linearizations;
      State s(initial.begin(), initial.end());
      for (int id : order) {
        if (!applicable(s, acts.at(id))) {
          v.ok = false;
          v.why = "precondition of " + to_string(acts.at(id).head) + " fails";
          return;
        }
        s = apply_action(std::move(s), acts.at(id));
      }
      if (!satisfies(s, goals)) {
        v.ok = false;
        v.why = "goals fail after a linearization";
      }
      return;
    }
    for (int id = 2; id < n; ++id) {
      if (used[id]) continue;
      bool ready = true;
      for (int p : before[id]) ready = ready && used[p];
      if (!ready) continue;
      used[id] = true;
      order.push_back(id);
      walk();
      order.pop_back();
      used[id] = false;
    }
  };
  walk();
  if (v.ok && v.linearizations == 0 && n > 2) return {false, "orderings are cyclic", 0};
  return v;
}

// ---------------------------------------------------------------------------
// Canonical form of a plan up to renaming of step ids. Steps are labelled by
// their instantiated heads; ids are permuted only among equal labels, and
// the smallest serialization wins.

inline std::string canonical_plan_key(const Plan& plan) {
  const int n = static_cast<int>(plan.steps.size());
  std::vector<std::string> label(n);
  for (int id = 0; id < n; ++id) label[id] = to_string(plan.instance(id), Syntax::Ground);

  std::set<std::pair<int, int>> closure;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && plan.precedes(a, b)) closure.emplace(a, b);
    }
  }

  std::map<std::string, std::vector<int>> groups;
  for (int id = 2; id < n; ++id) groups[label[id]].push_back(id);
  std::vector<std::vector<int>> perms;
  for (auto& [l, ids] : groups) perms.push_back(ids);

  std::string best;
  bool have = false;
  std::vector<int> slot(n);
  slot[0] = 0;
  slot[1] = 1;
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == perms.size()) {
      auto name = [&](int id) { return label[id] + "#" + std::to_string(slot[id]); };
      std::vector<std::string> parts;
      for (const auto& l : plan.links) {
        parts.push_back("L " + name(l.producer) + " " +
                        to_string(plan.instantiate(l.condition), Syntax::Ground) + " " +
                        name(l.consumer));
      }
      for (const auto& [a, b] : closure) parts.push_back("O " + name(a) + " " + name(b));
      std::sort(parts.begin(), parts.end());
      std::string key;
      for (const auto& p : parts) key += p + "\n";
      if (!have || key < best) {
        best = key;
        have = true;
      }
      return;
    }
    std::vector<int> ids = perms[g];
    std::vector<int> ranks(ids.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = static_cast<int>(i);
    do {
      for (std::size_t i = 0; i < ids.size(); ++i) slot[ids[i]] = ranks[i];
      rec(g + 1);
    } while (std::next_permutation(ranks.begin(), ranks.end()));
  };
  rec(0);
  return best;
}

// ---------------------------------------------------------------------------
// Random micro-domains: at most 4 operators over the unary predicates p, q, r
// and the constants a, b (six ground facts).

struct MicroDomain {
  std::vector<Operator> ops;
  std::vector<Term> initial;
  std::vector<Term> goals;
  std::vector<Term> constants;
};

inline MicroDomain random_micro_domain(std::mt19937& rng) {
  MicroDomain d;
  d.constants = {C("a"), C("b")};
  const std::vector<std::string> preds{"p", "q", "r"};
  std::vector<Term> facts;
  for (const auto& p : preds) {
    for (const Term& c : d.constants) facts.push_back(T(p, {c}));
  }
  const int nops = uniform(rng, 1, 4);
  for (int i = 0; i < nops; ++i) {
    const bool lifted = uniform(rng, 0, 2) > 0;
    const Term x = V("X");
    auto atom = [&] {
      const Term arg = lifted && uniform(rng, 0, 2) > 0 ? x : pick(rng, d.constants);
      return T(pick(rng, preds), {arg});
    };
    Operator o;
    o.name = std::string("o") + char('1' + i);
    if (lifted) o.params = {x};
    const int npre = uniform(rng, 0, 2);
    for (int k = 0; k < npre; ++k) o.preconditions.push_back(atom());
    // Keep X in a precondition most of the time so instances differ in
    // what they need.
    if (lifted && npre == 0 && uniform(rng, 0, 1)) o.preconditions.push_back(T(pick(rng, preds), {x}));
    const int nadd = uniform(rng, 1, 2);
    for (int k = 0; k < nadd; ++k) o.add.push_back(atom());
    const int ndel = uniform(rng, 0, 1);
    for (int k = 0; k < ndel; ++k) o.del.push_back(atom());
    d.ops.push_back(std::move(o));
  }
  for (const Term& f : facts) {
    if (uniform(rng, 0, 2) == 0) d.initial.push_back(f);
  }
  const int ngoals = uniform(rng, 1, 2);
  for (int k = 0; k < ngoals; ++k) {
    const Term g = pick(rng, facts);
    if (std::find(d.goals.begin(), d.goals.end(), g) == d.goals.end()) d.goals.push_back(g);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Fixture domains for the systematicity check. Ground operators only, so
// complete plans carry no variables and canonical_plan_key is exact.

inline nestbelief::Problem interacting_fixture() {
  nestbelief::Problem p;
  p.initial = {C("s")};
  p.goals = {C("q"), C("r"), C("p")};
  p.operators = {op("make_p", {}, {}, {C("p")}),
                 op("make_q", {}, {C("p")}, {C("q")}, {C("p")}),
                 op("make_pr", {}, {C("s")}, {C("p"), C("r")}, {C("s")}),
                 op("reset", {}, {}, {C("s")}, {C("r")})};
  return p;
}

// Sussman anomaly over ground move operators.
inline nestbelief::Problem ground_blocks_fixture() {
  nestbelief::Problem p;
  const std::vector<std::string> blocks{"a", "b", "c"};
  for (const auto& b : blocks) {
    for (const auto& from : blocks) {
      if (from == b) continue;
      p.operators.push_back(op("unstack", {C(b), C(from)},
                               {T("on", {C(b), C(from)}), T("clear", {C(b)})},
                               {T("on", {C(b), C("table")}), T("clear", {C(from)})},
                               {T("on", {C(b), C(from)})}));
      p.operators.push_back(op("stack", {C(b), C(from)},
                               {T("on", {C(b), C("table")}), T("clear", {C(b)}),
                                T("clear", {C(from)})},
                               {T("on", {C(b), C(from)})},
                               {T("on", {C(b), C("table")}), T("clear", {C(from)})}));
    }
  }
  p.initial = {GT("on(c, a)"), GT("on(a, table)"), GT("on(b, table)"), GT("clear(c)"),
               GT("clear(b)")};
  p.goals = {GT("on(a, b)"), GT("on(b, c)")};
  return p;
}

struct Systematicity {
  std::size_t nodes = 0;
  std::size_t complete = 0;
  std::size_t duplicates = 0;
};

inline Systematicity check_systematic(const nestbelief::Problem& p, std::size_t bound,
                                      std::size_t max_nodes = 2000000) {
  Systematicity s;
  std::set<std::string> keys;
  s.nodes = nestbelief::enumerate_search_tree(
      p, bound,
      [&](const Plan& plan, bool leaf) {
        if (!leaf || !nestbelief::is_complete(plan)) return;
        ++s.complete;
        if (!keys.insert(canonical_plan_key(plan)).second) ++s.duplicates;
      },
      max_nodes);
  return s;
}

}  // namespace nbtest
