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

#include <charconv>
#include <cmath>

#include "excalc/expr/token.h"

namespace excalc::expr {

namespace {

std::string format_message(Position pos, const std::string& message, const std::vector<std::string>& expected) {
    std::string out = pos.to_string() + ": " + message;
    if (!expected.empty()) {
        out += " (expected ";
        for (size_t i = 0; i < expected.size(); ++i) {
            out += (i == 0 ? "" : i + 1 == expected.size() ? " or " : ", ") + expected[i];
        }
        out += ")";
    }
    return out;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_word_char(char c) { return is_word_start(c) || is_digit(c); }

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (at_end()) {
                out.push_back(Token{TokenKind::end, "", pos_});
                return out;
            }
            out.push_back(next());
        }
    }

   private:
    bool at_end() const { return i_ >= src_.size(); }
    char peek(size_t ahead = 0) const { return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0'; }

    void advance(size_t n = 1) {
        for (size_t k = 0; k < n; ++k) {
            if (src_[i_] == '\n') {
                ++pos_.line;
                pos_.column = 1;
            } else {
                ++pos_.column;
            }
            ++i_;
        }
    }

    void skip_space() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) {
            advance();
        }
    }

    Token next() {
        char c = peek();
        Position start = pos_;
        if (is_digit(c)) {
            return number();
        }
        if (is_word_start(c)) {
            return word();
        }
        switch (c) {
            case '^':
            case '*':
            case '~':
            case '+':
            case '-':
            case ',':
                advance();
                return Token{TokenKind::op, std::string(1, c), start};
            case '(':
            case ')':
                advance();
                return Token{TokenKind::paren, std::string(1, c), start};
            default:
                break;
        }
        unsigned byte = static_cast<unsigned char>(c);
        std::string shown = (byte >= 0x20 && byte < 0x7f) ? std::string("'") + c + "'" : "byte " + std::to_string(byte);
        throw SyntaxError(start, "unexpected character " + shown);
    }

    Token number() {
        Position start = pos_;
        size_t begin = i_;
        auto digits = [&] {
            while (is_digit(peek())) {
                advance();
            }
        };
        digits();
        if (peek() == '.' && is_digit(peek(1))) {
            advance();
            digits();
        }
        if (peek() == 'e' || peek() == 'E') {
            size_t skip = (peek(1) == '+' || peek(1) == '-') ? 2 : 1;
            if (is_digit(peek(skip))) {
                advance(skip);
                digits();
            }
        }
        size_t end = i_;
        bool imaginary = peek() == 'i' && !is_word_char(peek(1));
        if (imaginary) {
            advance();
        }
        double x = 0;
        auto [ptr, ec] = std::from_chars(src_.data() + begin, src_.data() + end, x);
        if (ec != std::errc{} || ptr != src_.data() + end || !std::isfinite(x)) {
            throw SyntaxError(start, "numeric literal out of range");
        }
        Token t{TokenKind::scalar, std::string(src_.substr(begin, i_ - begin)), start};
        t.value = imaginary ? Coeff{0.0, x} : Coeff{x, 0.0};
        return t;
    }

    Token word() {
        Position start = pos_;
        size_t begin = i_;
        while (is_word_char(peek())) {
            advance();
        }
        std::string text(src_.substr(begin, i_ - begin));
        if (text == "E" || text == "v" || text == "ip") {
            return Token{TokenKind::keyword, text, start};
        }
        if (text.size() >= 2 && text[0] == 'e' && is_digit(text[1])) {
            bool all_digits = true;
            for (size_t k = 1; k < text.size(); ++k) {
                all_digits = all_digits && is_digit(text[k]);
            }
            if (all_digits) {
                Token t{TokenKind::basis, text, start};
                auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), t.index);
                if (ec != std::errc{}) {
                    throw SyntaxError(start, "basis index out of range in '" + text + "'");
                }
                return t;
            }
        }
        return Token{TokenKind::identifier, text, start};
    }

    std::string_view src_;
    size_t i_ = 0;
    Position pos_;
};

}  // namespace

const char* to_string(TokenKind kind) {
    switch (kind) {
        case TokenKind::basis:
            return "basis";
        case TokenKind::scalar:
            return "scalar";
        case TokenKind::op:
            return "op";
        case TokenKind::paren:
            return "paren";
        case TokenKind::identifier:
            return "identifier";
        case TokenKind::keyword:
            return "keyword";
        case TokenKind::end:
            break;
    }
    return "end";
}

SyntaxError::SyntaxError(Position pos, const std::string& message, std::vector<std::string> expected)
    : std::runtime_error(format_message(pos, message, expected)), pos_(pos), expected_(std::move(expected)) {}

std::vector<Token> tokenize(std::string_view input) { return Lexer(input).run(); }

}  // namespace excalc::expr
