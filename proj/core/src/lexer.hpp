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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mdolap/error.hpp"

namespace mdolap::dsl {

enum class TokenKind { Ident, String, Number, Arrow, LParen, RParen, Comma, Colon, Semicolon, Dot, Op, End, Invalid };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // identifier/operator spelling, unescaped string contents
  SourcePos pos;
  SourcePos end;  // position just past the token
};

/// Splits DSL text into tokens. Never throws: unexpected bytes become
/// Invalid tokens and an unterminated string runs to the end of input.
/// `--` starts a comment running to the end of the line.
std::vector<Token> tokenize(std::string_view source);

std::string describe(const Token& t);

}  // namespace mdolap::dsl
