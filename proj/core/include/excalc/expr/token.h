// Copyright 2026 The excalc Authors
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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "excalc/multivector.h"

namespace excalc::expr {

/// 1-based line and column; columns count bytes.
struct Position {
    int line = 1;
    int column = 1;

    std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column); }
    friend auto operator<=>(const Position&, const Position&) = default;
};

enum class TokenKind { basis, scalar, op, paren, identifier, keyword, end };

const char* to_string(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;
    Position pos;
    /// basis: the index. scalar: the value.
    int index = 0;
    Coeff value{};
};

/// Raised by the lexer and the parser. `expected` lists what would have been
/// accepted at `pos`, e.g. {"expression", ")"}.
class SyntaxError : public std::runtime_error {
   public:
    SyntaxError(Position pos, const std::string& message, std::vector<std::string> expected = {});

    Position pos() const { return pos_; }
    const std::vector<std::string>& expected() const { return expected_; }

   private:
    Position pos_;
    std::vector<std::string> expected_;
};

/// Longest-match lexing. Words are split into basis symbols ("e3"), the
/// keywords E, v and ip, and identifiers. Numbers are digits[.digits]
/// [(e|E)[+-]digits][i]. The stream always ends with a TokenKind::end token.
std::vector<Token> tokenize(std::string_view input);

}  // namespace excalc::expr
