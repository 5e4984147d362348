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
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nestbelief {

/// How uppercase-initial identifiers are read and written.
///
/// In `Schema` syntax an uppercase-initial identifier is a variable and a
/// constant whose name would be mistaken for one is written quoted ('John').
/// `Ground` syntax is used for stored attitudes, which never contain
/// variables, so every identifier is a constant.
enum class Syntax { Schema, Ground };

class Term {
 public:
  enum class Kind : unsigned char { Constant, Variable, Compound };

  static Term constant(std::string name);
  static Term variable(std::string name);
  /// A compound with no arguments collapses to a constant.
  static Term compound(std::string functor, std::vector<Term> args);

  Term() : Term(constant("nil")) {}

  Kind kind() const { return kind_; }
  bool is_constant() const { return kind_ == Kind::Constant; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_compound() const { return kind_ == Kind::Compound; }

  /// Constant or variable name, or the functor of a compound.
  const std::string& name() const { return name_; }
  std::span<const Term> args() const { return args_; }
  std::size_t arity() const { return args_.size(); }

  bool is_ground() const;
  bool contains_variable(std::string_view var) const;
  void collect_variables(std::set<std::string>& out) const;

  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
  friend bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

 private:
  Term(Kind kind, std::string name, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_;
  std::string name_;
  std::vector<Term> args_;
};

/// Idempotent substitution from variable names to terms.
using Bindings = std::map<std::string, Term>;

/// Most general unifier of `a` and `b` extending `start`, with occurs check.
/// The result is idempotent: no bound variable occurs in any binding value.
std::optional<Bindings> unify(const Term& a, const Term& b, const Bindings& start = {});

/// Replaces bound variables until a fixpoint is reached. Unbound variables are
/// left as they are; a variable cycle in non-idempotent input stops at the
/// variable that closes it.
Term substitute(const Bindings& b, const Term& t);

/// Rewrites every binding value with `substitute` so the map is idempotent.
Bindings normalize(const Bindings& b);

/// Collapses `not(not(x))` to `x` at every position.
Term normalize_negations(const Term& t);

/// A literal: a term body under explicit polarity. The body never carries an
/// outer `not`.
class Proposition {
 public:
  Proposition() = default;
  /// Strips outer `not` wrappers into the polarity.
  explicit Proposition(const Term& t);
  Proposition(bool negated, const Term& body);

  bool negated() const { return negated_; }
  const Term& body() const { return body_; }
  Term term() const;

  friend auto operator<=>(const Proposition&, const Proposition&) = default;
  friend bool operator==(const Proposition&, const Proposition&) = default;

 private:
  bool negated_ = false;
  Term body_;
};

Proposition negate(const Proposition& p);

std::string to_string(const Term& t, Syntax syntax = Syntax::Schema);
std::string to_string(const Proposition& p, Syntax syntax = Syntax::Schema);

/// Parses a single term; the whole input must be consumed.
Term parse_term(std::string_view text, Syntax syntax = Syntax::Schema);

/// True when `name` would lex as a variable in schema syntax.
bool looks_like_variable(std::string_view name);

}  // namespace nestbelief
