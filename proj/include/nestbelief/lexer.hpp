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

#include <string>
#include <string_view>
#include <vector>

#include "nestbelief/term.hpp"

namespace nestbelief {

enum class TokenKind {
  Ident,
  Quoted,  // 'single quoted' constant
  String,  // "double quoted" literal
  LParen,
  RParen,
  Comma,
  Colon,
  Semicolon,
  LBrace,
  RBrace,
  Gt,
  Newline,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::string describe(TokenKind kind);

/// Splits DSL text into tokens. `#` starts a comment running to end of line.
/// Line breaks inside braces or parentheses are not reported, so a block may
/// span several lines. Unknown characters raise ParseError.
std::vector<Token> tokenize(std::string_view text);

/// Cursor over a token vector with the term grammar built in.
class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_ident(std::string_view word) const;
  bool accept(TokenKind kind);
  bool accept_ident(std::string_view word);
  const Token& expect(TokenKind kind, std::string_view what = {});
  const Token& expect_ident(std::string_view what = "identifier");
  void expect_word(std::string_view word);

  [[noreturn]] void fail(std::string_view expected) const;

  Term term(Syntax syntax);

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace nestbelief
