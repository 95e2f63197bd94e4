// Copyright 2026 The mdolap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexer.hpp"

namespace mdolap::dsl {

namespace {

bool ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool done() const { return i_ >= s_.size(); }
  char peek(std::size_t ahead = 0) const { return i_ + ahead < s_.size() ? s_[i_ + ahead] : '\0'; }
  bool starts_with(std::string_view p) const { return s_.substr(i_).starts_with(p); }
  SourcePos pos() const { return {line_, column_}; }

  char advance() {
    char c = s_[i_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      // Columns count code points, so continuation bytes do not advance.
      ++column_;
    }
    return c;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> out;
  Cursor cur(source);
  auto emit = [&](TokenKind kind, std::string text, SourcePos start) {
    out.push_back(Token{kind, std::move(text), start, cur.pos()});
  };
  while (!cur.done()) {
    char c = cur.peek();
    SourcePos start = cur.pos();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      cur.advance();
    } else if (cur.starts_with("--")) {
      while (!cur.done() && cur.peek() != '\n') cur.advance();
    } else if (ident_start(c)) {
      std::string text;
      while (!cur.done() && ident_char(cur.peek())) text += cur.advance();
      emit(TokenKind::Ident, std::move(text), start);
    } else if (digit(c) || (c == '-' && digit(cur.peek(1)))) {
      std::string text(1, cur.advance());
      while (!cur.done() && digit(cur.peek())) text += cur.advance();
      if (cur.peek() == '.' && digit(cur.peek(1))) {
        text += cur.advance();
        while (!cur.done() && digit(cur.peek())) text += cur.advance();
      }
      emit(TokenKind::Number, std::move(text), start);
    } else if (c == '\'') {
      cur.advance();
      std::string text;
      bool closed = false;
      while (!cur.done()) {
        char ch = cur.advance();
        if (ch == '\'') {
          if (cur.peek() == '\'') {
            text += cur.advance();
            continue;
          }
          closed = true;
          break;
        }
        text += ch;
      }
      emit(closed ? TokenKind::String : TokenKind::Invalid, closed ? std::move(text) : "'" + text, start);
    } else if (cur.starts_with("->")) {
      cur.advance();
      cur.advance();
      emit(TokenKind::Arrow, "->", start);
    } else if (cur.starts_with("<>") || cur.starts_with("!=") || cur.starts_with("<=") || cur.starts_with(">=")) {
      std::string text{cur.advance()};
      text += cur.advance();
      if (text == "!=") text = "<>";
      emit(TokenKind::Op, std::move(text), start);
    } else if (c == '=' || c == '<' || c == '>') {
      emit(TokenKind::Op, std::string(1, cur.advance()), start);
    } else if (cur.starts_with("≠") || cur.starts_with("≤") || cur.starts_with("≥")) {
      std::string text = cur.starts_with("≠") ? "<>" : cur.starts_with("≤") ? "<=" : ">=";
      for (int k = 0; k < 3; ++k) cur.advance();
      emit(TokenKind::Op, std::move(text), start);
    } else {
      TokenKind kind = TokenKind::Invalid;
      switch (c) {
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        case ',': kind = TokenKind::Comma; break;
        case ':': kind = TokenKind::Colon; break;
        case ';': kind = TokenKind::Semicolon; break;
        case '.': kind = TokenKind::Dot; break;
        default: break;
      }
      std::string text(1, cur.advance());
      // Keep a multi-byte character together in the diagnostic text.
      while (kind == TokenKind::Invalid && !cur.done() && (static_cast<unsigned char>(cur.peek()) & 0xC0) == 0x80) {
        text += cur.advance();
      }
      emit(kind, std::move(text), start);
    }
  }
  out.push_back(Token{TokenKind::End, "", cur.pos(), cur.pos()});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End: return "end of input";
    case TokenKind::String: return "string '" + t.text + "'";
    case TokenKind::Invalid: return "invalid input '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

}  // namespace mdolap::dsl
