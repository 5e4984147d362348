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
#include <optional>
#include <string>
#include <string_view>

#include "nestbelief/term.hpp"

namespace nestbelief {

enum class AttitudeType { Belief, Goal, Intention };

std::string_view to_string(AttitudeType at);
/// Accepts `belief`/`believe`, `goal`, `intention`/`intend`.
std::optional<AttitudeType> parse_attitude(std::string_view word);
/// Functor used for an attitude inside formulas: believe, goal, intend.
std::string_view attitude_functor(AttitudeType at);

/// An attitude formula: either an atom (a Proposition) or an attitude
/// `believe|goal|intend(Agent, Body)` over another formula, optionally under
/// one explicit negation.
///
/// The formula is held in canonical term form: `not(not(x))` collapses,
/// `belief` is spelled `believe`, and an atom never has an outer `not`
/// inside the wrapper. Comparison is structural on that form.
class Formula {
 public:
  Formula() = default;
  explicit Formula(const Term& t);
  explicit Formula(const Proposition& p) : Formula(p.term()) {}

  static Formula attitude(AttitudeType at, const Term& agent, const Formula& body);

  bool negated() const;
  bool is_attitude() const;
  bool is_atom() const { return !is_attitude(); }

  // Valid only when is_attitude().
  AttitudeType attitude() const;
  const Term& agent() const;
  Formula body() const;

  /// The literal for an atom formula (polarity included).
  Proposition atom() const;

  /// The formula without its outer negation.
  Formula positive() const;

  const Term& term() const { return term_; }
  bool is_ground() const { return term_.is_ground(); }
  /// Number of nested attitude operators.
  std::size_t depth() const;

  friend auto operator<=>(const Formula&, const Formula&) = default;
  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  const Term& core() const;
  Term term_;
};

Formula negate(const Formula& f);
Formula substitute(const Bindings& b, const Formula& f);
std::string to_string(const Formula& f, Syntax syntax = Syntax::Schema);
Formula parse_formula(std::string_view text, Syntax syntax = Syntax::Schema);

}  // namespace nestbelief
