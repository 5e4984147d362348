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

#include "nestbelief/lexer.hpp"

#include <cctype>

#include "nestbelief/errors.hpp"

namespace nestbelief {
namespace {

bool ident_start(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return ident_start(c) || c == '-' || c == '.' || c == '/';
}

}  // namespace

std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Quoted: return "quoted constant";
    case TokenKind::String: return "string";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Colon: return "':'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Gt: return "'>'";
    case TokenKind::Newline: return "end of line";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  int depth = 0;
  std::size_t i = 0;
  auto push = [&](TokenKind k, std::string s, int l, int c) {
    out.push_back(Token{k, std::move(s), l, c});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      if (depth == 0 && !out.empty() && out.back().kind != TokenKind::Newline) {
        push(TokenKind::Newline, "\\n", line, col);
      }
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const int start_col = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      push(TokenKind::Ident, std::string(text.substr(i, j - i)), line, start_col);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '\'' || c == '"') {
      std::string s;
      std::size_t j = i + 1;
      bool closed = false;
      while (j < text.size() && text[j] != '\n') {
        if (text[j] == '\\' && j + 1 < text.size()) {
          s.push_back(text[j + 1]);
          j += 2;
          continue;
        }
        if (text[j] == c) {
          closed = true;
          break;
        }
        s.push_back(text[j]);
        ++j;
      }
      if (!closed) throw ParseError(line, start_col, "closing quote", std::string(1, c));
      push(c == '\'' ? TokenKind::Quoted : TokenKind::String, s, line, start_col);
      col += static_cast<int>(j + 1 - i);
      i = j + 1;
      continue;
    }
    TokenKind k;
    switch (c) {
      case '(': k = TokenKind::LParen; ++depth; break;
      case ')': k = TokenKind::RParen; depth = depth > 0 ? depth - 1 : 0; break;
      case '{': k = TokenKind::LBrace; ++depth; break;
      case '}': k = TokenKind::RBrace; depth = depth > 0 ? depth - 1 : 0; break;
      case ',': k = TokenKind::Comma; break;
      case ':': k = TokenKind::Colon; break;
      case ';': k = TokenKind::Semicolon; break;
      case '>': k = TokenKind::Gt; break;
      default:
        throw ParseError(line, start_col, "token", std::string(1, c));
    }
    push(k, std::string(1, c), line, start_col);
    ++i;
    ++col;
  }
  push(TokenKind::End, "", line, col);
  return out;
}

const Token& TokenCursor::peek(std::size_t ahead) const {
  std::size_t p = pos_ + ahead;
  return p < tokens_.size() ? tokens_[p] : tokens_.back();
}

const Token& TokenCursor::next() {
  const Token& t = peek();
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenCursor::at_ident(std::string_view word) const {
  return peek().kind == TokenKind::Ident && peek().text == word;
}

bool TokenCursor::accept(TokenKind kind) {
  if (!at(kind)) return false;
  next();
  return true;
}

bool TokenCursor::accept_ident(std::string_view word) {
  if (!at_ident(word)) return false;
  next();
  return true;
}

const Token& TokenCursor::expect(TokenKind kind, std::string_view what) {
  if (!at(kind)) fail(what.empty() ? describe(kind) : std::string(what));
  return next();
}

const Token& TokenCursor::expect_ident(std::string_view what) {
  return expect(TokenKind::Ident, what);
}

void TokenCursor::expect_word(std::string_view word) {
  if (!at_ident(word)) fail("'" + std::string(word) + "'");
  next();
}

void TokenCursor::fail(std::string_view expected) const {
  const Token& t = peek();
  throw ParseError(t.line, t.column, std::string(expected),
                   t.kind == TokenKind::End ? "" : t.text);
}

Term TokenCursor::term(Syntax syntax) {
  const Token& head = peek();
  if (head.kind == TokenKind::Quoted) {
    next();
    return Term::constant(head.text);
  }
  if (head.kind != TokenKind::Ident) fail("term");
  std::string name = next().text;
  if (accept(TokenKind::LParen)) {
    std::vector<Term> args;
    args.push_back(term(syntax));
    while (accept(TokenKind::Comma)) args.push_back(term(syntax));
    expect(TokenKind::RParen, "',' or ')'");
    return Term::compound(std::move(name), std::move(args));
  }
  if (syntax == Syntax::Schema && looks_like_variable(name)) return Term::variable(std::move(name));
  return Term::constant(std::move(name));
}

}  // namespace nestbelief
