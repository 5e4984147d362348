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

#include "nestbelief/formula.hpp"

#include <stdexcept>

namespace nestbelief {
namespace {

bool is_not(const Term& t) { return t.is_compound() && t.name() == "not" && t.arity() == 1; }

std::optional<AttitudeType> attitude_of(const Term& t) {
  if (!t.is_compound() || t.arity() != 2) return std::nullopt;
  const std::string& f = t.name();
  if (f == "believe" || f == "belief") return AttitudeType::Belief;
  if (f == "goal") return AttitudeType::Goal;
  if (f == "intend") return AttitudeType::Intention;
  return std::nullopt;
}

Term canonical(const Term& t) {
  bool neg = false;
  const Term* cur = &t;
  while (is_not(*cur)) {
    neg = !neg;
    cur = &cur->args()[0];
  }
  Term inner;
  if (auto at = attitude_of(*cur)) {
    inner = Term::compound(std::string(attitude_functor(*at)),
                           {cur->args()[0], canonical(cur->args()[1])});
  } else {
    inner = normalize_negations(*cur);
  }
  return neg ? Term::compound("not", {std::move(inner)}) : inner;
}

}  // namespace

std::string_view to_string(AttitudeType at) {
  switch (at) {
    case AttitudeType::Belief: return "belief";
    case AttitudeType::Goal: return "goal";
    case AttitudeType::Intention: return "intention";
  }
  return "belief";
}

std::optional<AttitudeType> parse_attitude(std::string_view word) {
  if (word == "belief" || word == "believe") return AttitudeType::Belief;
  if (word == "goal") return AttitudeType::Goal;
  if (word == "intention" || word == "intend") return AttitudeType::Intention;
  return std::nullopt;
}

std::string_view attitude_functor(AttitudeType at) {
  switch (at) {
    case AttitudeType::Belief: return "believe";
    case AttitudeType::Goal: return "goal";
    case AttitudeType::Intention: return "intend";
  }
  return "believe";
}

Formula::Formula(const Term& t) : term_(canonical(t)) {}

Formula Formula::attitude(AttitudeType at, const Term& agent, const Formula& body) {
  return Formula(Term::compound(std::string(attitude_functor(at)), {agent, body.term()}));
}

const Term& Formula::core() const { return is_not(term_) ? term_.args()[0] : term_; }

bool Formula::negated() const { return is_not(term_); }

bool Formula::is_attitude() const { return attitude_of(core()).has_value(); }

AttitudeType Formula::attitude() const {
  auto at = attitude_of(core());
  if (!at) throw std::logic_error("formula is not an attitude: " + to_string(term_));
  return *at;
}

const Term& Formula::agent() const {
  if (!is_attitude()) throw std::logic_error("formula is not an attitude: " + to_string(term_));
  return core().args()[0];
}

Formula Formula::body() const {
  if (!is_attitude()) throw std::logic_error("formula is not an attitude: " + to_string(term_));
  return Formula(core().args()[1]);
}

Proposition Formula::atom() const { return Proposition(term_); }

Formula Formula::positive() const { return Formula(core()); }

std::size_t Formula::depth() const {
  return is_attitude() ? 1 + body().depth() : 0;
}

Formula negate(const Formula& f) {
  return Formula(Term::compound("not", {f.term()}));
}

Formula substitute(const Bindings& b, const Formula& f) {
  return Formula(substitute(b, f.term()));
}

std::string to_string(const Formula& f, Syntax syntax) { return to_string(f.term(), syntax); }

Formula parse_formula(std::string_view text, Syntax syntax) {
  return Formula(parse_term(text, syntax));
}

}  // namespace nestbelief
