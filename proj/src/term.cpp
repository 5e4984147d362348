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

#include "nestbelief/term.hpp"

#include <algorithm>
#include <cctype>

#include "nestbelief/errors.hpp"
#include "nestbelief/lexer.hpp"

namespace nestbelief {

Term Term::constant(std::string name) {
  return Term(Kind::Constant, std::move(name), {});
}

Term Term::variable(std::string name) {
  return Term(Kind::Variable, std::move(name), {});
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) return constant(std::move(functor));
  return Term(Kind::Compound, std::move(functor), std::move(args));
}

bool Term::is_ground() const {
  if (kind_ == Kind::Variable) return false;
  return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
}

bool Term::contains_variable(std::string_view var) const {
  if (kind_ == Kind::Variable) return name_ == var;
  return std::any_of(args_.begin(), args_.end(),
                     [&](const Term& a) { return a.contains_variable(var); });
}

void Term::collect_variables(std::set<std::string>& out) const {
  if (kind_ == Kind::Variable) out.insert(name_);
  for (const Term& a : args_) a.collect_variables(out);
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args_.begin(), a.args_.end(), b.args_.begin(),
                                                b.args_.end());
}

namespace {

// Follows variable bindings to the representative term (one level deep).
const Term& walk(const Term& t, const Bindings& b) {
  const Term* cur = &t;
  while (cur->is_variable()) {
    auto it = b.find(cur->name());
    if (it == b.end()) break;
    cur = &it->second;
  }
  return *cur;
}

bool occurs(std::string_view var, const Term& t, const Bindings& b) {
  const Term& w = walk(t, b);
  if (w.is_variable()) return w.name() == var;
  for (const Term& a : w.args()) {
    if (occurs(var, a, b)) return true;
  }
  return false;
}

bool unify_into(const Term& x, const Term& y, Bindings& b) {
  const Term& a = walk(x, b);
  const Term& c = walk(y, b);
  if (a.is_variable() && c.is_variable() && a.name() == c.name()) return true;
  if (a.is_variable()) {
    if (occurs(a.name(), c, b)) return false;
    b.insert_or_assign(a.name(), c);
    return true;
  }
  if (c.is_variable()) {
    if (occurs(c.name(), a, b)) return false;
    b.insert_or_assign(c.name(), a);
    return true;
  }
  if (a.kind() != c.kind() || a.name() != c.name() || a.arity() != c.arity()) return false;
  // `a` and `c` may point into `b`; std::map nodes stay put on insertion.
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!unify_into(a.args()[i], c.args()[i], b)) return false;
  }
  return true;
}

Term substitute_guarded(const Bindings& b, const Term& t, std::vector<std::string>& stack) {
  if (t.is_variable()) {
    auto it = b.find(t.name());
    if (it == b.end()) return t;
    if (std::find(stack.begin(), stack.end(), t.name()) != stack.end()) return t;
    stack.push_back(t.name());
    Term r = substitute_guarded(b, it->second, stack);
    stack.pop_back();
    return r;
  }
  if (!t.is_compound()) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(substitute_guarded(b, a, stack));
  return Term::compound(t.name(), std::move(args));
}

}  // namespace

std::optional<Bindings> unify(const Term& a, const Term& b, const Bindings& start) {
  Bindings work = start;
  if (!unify_into(a, b, work)) return std::nullopt;
  return normalize(work);
}

Term substitute(const Bindings& b, const Term& t) {
  if (b.empty()) return t;
  std::vector<std::string> stack;
  return substitute_guarded(b, t, stack);
}

Bindings normalize(const Bindings& b) {
  Bindings out;
  for (const auto& [var, value] : b) {
    Term v = substitute(b, value);
    if (v.is_variable() && v.name() == var) continue;
    out.emplace(var, std::move(v));
  }
  return out;
}

Term normalize_negations(const Term& t) {
  if (!t.is_compound()) return t;
  if (t.name() == "not" && t.arity() == 1) {
    const Term& inner = t.args()[0];
    if (inner.is_compound() && inner.name() == "not" && inner.arity() == 1) {
      return normalize_negations(inner.args()[0]);
    }
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(normalize_negations(a));
  return Term::compound(t.name(), std::move(args));
}

Proposition::Proposition(const Term& t) : Proposition(false, t) {}

Proposition::Proposition(bool negated, const Term& body) : negated_(negated) {
  Term cur = normalize_negations(body);
  while (cur.is_compound() && cur.name() == "not" && cur.arity() == 1) {
    negated_ = !negated_;
    Term inner = cur.args()[0];
    cur = std::move(inner);
  }
  body_ = std::move(cur);
}

Term Proposition::term() const {
  return negated_ ? Term::compound("not", {body_}) : body_;
}

Proposition negate(const Proposition& p) {
  return Proposition(!p.negated(), p.body());
}

bool looks_like_variable(std::string_view name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
}

namespace {

bool plain_constant(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalnum(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
          c == '/')) {
      return false;
    }
  }
  return true;
}

void print(const Term& t, Syntax syntax, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      out += t.name();
      return;
    case Term::Kind::Constant:
      if (plain_constant(t.name()) &&
          (syntax == Syntax::Ground || !looks_like_variable(t.name()))) {
        out += t.name();
      } else {
        out += '\'';
        for (char c : t.name()) {
          if (c == '\'' || c == '\\') out += '\\';
          out += c;
        }
        out += '\'';
      }
      return;
    case Term::Kind::Compound:
      out += t.name();
      out += '(';
      for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i) out += ',';
        print(t.args()[i], syntax, out);
      }
      out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const Term& t, Syntax syntax) {
  std::string out;
  print(t, syntax, out);
  return out;
}

std::string to_string(const Proposition& p, Syntax syntax) {
  return to_string(p.term(), syntax);
}

Term parse_term(std::string_view text, Syntax syntax) {
  TokenCursor cur(tokenize(text));
  while (cur.accept(TokenKind::Newline)) {
  }
  Term t = cur.term(syntax);
  while (cur.accept(TokenKind::Newline)) {
  }
  if (!cur.at(TokenKind::End)) cur.fail("end of input");
  return t;
}

}  // namespace nestbelief
