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

#include "nestbelief/errors.hpp"
#include "nestbelief/lexer.hpp"
#include "nestbelief/scenario.hpp"

namespace nestbelief {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : cur_(tokenize(text)) {}

  std::vector<ScenarioCommand> parse() {
    std::vector<ScenarioCommand> out;
    while (true) {
      while (cur_.accept(TokenKind::Newline) || cur_.accept(TokenKind::Semicolon)) {
      }
      if (cur_.at(TokenKind::End)) break;
      ScenarioCommand c;
      c.line = cur_.peek().line;
      c.body = statement();
      if (!cur_.at(TokenKind::End) && !cur_.accept(TokenKind::Newline) &&
          !cur_.accept(TokenKind::Semicolon)) {
        cur_.fail("end of line");
      }
      out.push_back(std::move(c));
    }
    return out;
  }

 private:
  using Body = decltype(ScenarioCommand::body);

  Body statement() {
    const Token& head = cur_.peek();
    if (head.kind != TokenKind::Ident) cur_.fail("command");
    const std::string word = head.text;
    if (word == "agent") {
      cur_.next();
      return cmd::DeclareAgent{cur_.expect_ident("agent name").text};
    }
    if (word == "believe" || word == "belief" || word == "goal" || word == "intend" ||
        word == "intention") {
      cur_.next();
      const AttitudeType at = *parse_attitude(word);
      Path p = path_then_colon();
      return cmd::Assert{std::move(p), at, formula(Syntax::Ground)};
    }
    if (word == "retract") {
      cur_.next();
      const AttitudeType at = attitude_word();
      Path p = path_then_colon();
      return cmd::Retract{std::move(p), at, formula(Syntax::Ground)};
    }
    if (word == "topic") {
      cur_.next();
      Path p = path();
      const AttitudeType at = attitude_word();
      cur_.expect(TokenKind::Colon);
      return cmd::Topic{std::move(p), at, label()};
    }
    if (word == "stereotype") {
      cur_.next();
      return stereotype();
    }
    if (word == "trust") {
      cur_.next();
      Path p = path_then_colon();
      return cmd::Trust{std::move(p), cur_.expect_ident("agent name").text};
    }
    if (word == "ascribe") {
      cur_.next();
      return ascribe();
    }
    if (word == "perform") {
      cur_.next();
      cmd::Side side = cmd::Side::Both;
      if (cur_.accept_ident("speaker")) {
        side = cmd::Side::Speaker;
      } else if (cur_.accept_ident("hearer")) {
        side = cmd::Side::Hearer;
      } else {
        cur_.accept_ident("both");
      }
      const Token& at = cur_.peek();
      const Term t = cur_.term(Syntax::Ground);
      cmd::Perform p{side, {}, std::nullopt};
      try {
        p.act = ActInstance::from_term(t);
      } catch (const Error&) {
        throw ParseError(at.line, at.column, "act(Speaker, Hearer, Content)",
                         to_string(t, Syntax::Ground));
      }
      if (cur_.accept_ident("at")) p.at = path();
      return p;
    }
    if (word == "simulate") {
      cur_.next();
      Path p = path();
      cur_.expect_word("achieving");
      return cmd::Simulate{std::move(p), formula_block(Syntax::Ground)};
    }
    if (word == "recognize") {
      cur_.next();
      Path p = path();
      cur_.expect_word("observing");
      return cmd::Recognize{std::move(p), cur_.term(Syntax::Ground)};
    }
    if (word == "show") {
      cur_.next();
      return show();
    }
    if (word == "expect") {
      cur_.next();
      Path p = path();
      const AttitudeType at = attitude_word();
      Formula f = formula(Syntax::Ground);
      cur_.expect_word("is");
      Status s;
      if (cur_.accept_ident("holds")) {
        s = Status::Holds;
      } else if (cur_.accept_ident("contrary")) {
        s = Status::Contrary;
      } else if (cur_.accept_ident("unknown")) {
        s = Status::Unknown;
      } else {
        cur_.fail("holds, contrary or unknown");
      }
      return cmd::Expect{std::move(p), at, std::move(f), s};
    }
    if (word == "library") {
      cur_.next();
      return cmd::LoadLibrary{label()};
    }
    if (word == "acts") {
      cur_.next();
      if (cur_.accept_ident("default")) return cmd::ResetActs{true};
      if (cur_.accept_ident("none")) return cmd::ResetActs{false};
      cur_.fail("default or none");
    }
    if (word == "act") {
      cur_.next();
      return act();
    }
    if (word == "operator") {
      cur_.next();
      return operator_def();
    }
    cur_.fail("command");
  }

  Path path() {
    Path p;
    p.owner = cur_.expect_ident("agent name").text;
    std::vector<Hop> hops;
    while (cur_.accept(TokenKind::Gt)) {
      hops.push_back(Hop{cur_.expect_ident("agent name").text, AttitudeType::Belief});
    }
    p.viewpoint = Viewpoint(std::move(hops));
    return p;
  }

  Path path_then_colon() {
    Path p = path();
    cur_.expect(TokenKind::Colon, "':' or '>'");
    return p;
  }

  AttitudeType attitude_word() {
    const Token& t = cur_.peek();
    if (t.kind == TokenKind::Ident) {
      if (auto at = parse_attitude(t.text)) {
        cur_.next();
        return *at;
      }
    }
    cur_.fail("belief, goal or intention");
  }

  Formula formula(Syntax syntax) {
    const Token& at = cur_.peek();
    const Term t = cur_.term(syntax);
    try {
      return Formula(t);
    } catch (const Error&) {
      throw ParseError(at.line, at.column, "formula", to_string(t, syntax));
    }
  }

  std::string label() {
    const Token& t = cur_.peek();
    if (t.kind == TokenKind::String || t.kind == TokenKind::Quoted || t.kind == TokenKind::Ident) {
      return cur_.next().text;
    }
    cur_.fail("label");
  }

  std::vector<Formula> formula_block(Syntax syntax) {
    std::vector<Formula> out;
    cur_.expect(TokenKind::LBrace);
    while (!cur_.accept(TokenKind::RBrace)) {
      out.push_back(formula(syntax));
      if (!cur_.accept(TokenKind::Semicolon) && !cur_.at(TokenKind::RBrace)) cur_.fail("';' or '}'");
    }
    return out;
  }

  std::vector<Term> term_block(Syntax syntax) {
    std::vector<Term> out;
    cur_.expect(TokenKind::LBrace);
    while (!cur_.accept(TokenKind::RBrace)) {
      out.push_back(cur_.term(syntax));
      if (!cur_.accept(TokenKind::Semicolon) && !cur_.at(TokenKind::RBrace)) cur_.fail("';' or '}'");
    }
    return out;
  }

  cmd::Stereotype stereotype() {
    cmd::Stereotype s;
    s.name = cur_.expect_ident("stereotype name").text;
    if (cur_.accept_ident("in")) s.store = cur_.expect_ident("agent name").text;
    cur_.expect(TokenKind::LBrace);
    while (!cur_.accept(TokenKind::RBrace)) {
      StereotypeMember m;
      const Token& t = cur_.peek();
      if (t.kind == TokenKind::Ident && cur_.peek(1).kind != TokenKind::LParen) {
        if (auto at = parse_attitude(t.text)) {
          cur_.next();
          m.attitude = *at;
        }
      }
      m.formula = formula(Syntax::Ground);
      s.members.insert(std::move(m));
      if (!cur_.accept(TokenKind::Semicolon) && !cur_.at(TokenKind::RBrace)) cur_.fail("';' or '}'");
    }
    return s;
  }

  cmd::Ascribe ascribe() {
    cmd::Ascribe a;
    if (cur_.accept_ident("default")) {
      a.kind = cmd::AscribeKind::Default;
      a.path = path();
      cur_.expect_word("to");
      a.agent = cur_.expect_ident("agent name").text;
      cur_.expect(TokenKind::Colon);
      a.formula = formula(Syntax::Ground);
    } else if (cur_.accept_ident("stereotype")) {
      a.kind = cmd::AscribeKind::Stereotype;
      a.path = path();
      cur_.expect_word("to");
      a.agent = cur_.expect_ident("agent name").text;
    } else if (cur_.accept_ident("accept")) {
      a.kind = cmd::AscribeKind::Accept;
      a.path = path();
      cur_.expect_word("from");
      a.agent = cur_.expect_ident("agent name").text;
      cur_.expect(TokenKind::Colon);
      a.formula = formula(Syntax::Ground);
    } else if (cur_.accept_ident("demand")) {
      a.kind = cmd::AscribeKind::Demand;
      a.path = path_then_colon();
      a.formula = formula(Syntax::Ground);
    } else {
      cur_.fail("default, stereotype, accept or demand");
    }
    return a;
  }

  cmd::Show show() {
    cmd::Show s;
    auto format_word = [&]() -> std::optional<RenderFormat> {
      if (cur_.accept_ident("ascii")) return RenderFormat::Ascii;
      if (cur_.accept_ident("json")) return RenderFormat::Json;
      if (cur_.accept_ident("dsl")) return RenderFormat::Structured;
      return std::nullopt;
    };
    const bool last = cur_.peek(1).kind == TokenKind::Newline ||
                      cur_.peek(1).kind == TokenKind::End ||
                      cur_.peek(1).kind == TokenKind::Semicolon;
    if (cur_.at(TokenKind::Ident) && !(last && (cur_.at_ident("ascii") || cur_.at_ident("json") ||
                                                cur_.at_ident("dsl")))) {
      s.path = path();
    }
    s.format = format_word();
    return s;
  }

  cmd::DefineAct act() {
    cmd::DefineAct d;
    d.schema.name = cur_.expect_ident("act name").text;
    cur_.expect_word("class");
    const Token& ct = cur_.peek();
    auto cls = ct.kind == TokenKind::Ident ? parse_act_class(ct.text) : std::nullopt;
    if (!cls) cur_.fail("question, answer, request or inform");
    cur_.next();
    d.schema.act_class = *cls;
    if (cur_.accept_ident("isa")) d.schema.parent = cur_.expect_ident("act name").text;
    cur_.expect_word("pre");
    d.schema.own_preconditions = formula_block(Syntax::Schema);
    return d;
  }

  cmd::DefineOperator operator_def() {
    cmd::DefineOperator d;
    const Term head = cur_.term(Syntax::Schema);
    d.op.name = head.name();
    d.op.params.assign(head.args().begin(), head.args().end());
    cur_.expect_word("pre");
    d.op.preconditions = term_block(Syntax::Schema);
    cur_.expect_word("add");
    d.op.add = term_block(Syntax::Schema);
    if (cur_.accept_ident("del")) d.op.del = term_block(Syntax::Schema);
    return d;
  }

  TokenCursor cur_;
};

}  // namespace

std::vector<ScenarioCommand> parse_scenario(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace nestbelief
