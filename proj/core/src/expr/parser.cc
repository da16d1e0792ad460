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

#include "excalc/expr/parser.h"

#include "excalc/format.h"

namespace excalc::expr {

namespace {

// Deep nesting is rejected instead of exhausting the stack.
constexpr int kMaxDepth = 256;

ExprPtr make(NodeKind kind, Position pos, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
    auto n = std::make_unique<ExprNode>();
    n->kind = kind;
    n->pos = pos;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

const std::vector<std::string> kAtomStart = {"basis vector", "number", "'E'", "identifier", "'ip'", "'('"};

std::vector<std::string> with_atoms(std::vector<std::string> extra) {
    extra.insert(extra.end(), kAtomStart.begin(), kAtomStart.end());
    return extra;
}

class Parser {
   public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
        if (toks_.empty() || toks_.back().kind != TokenKind::end) {
            throw std::invalid_argument("token stream must end with an end token");
        }
    }

    ExprPtr run() {
        ExprPtr e = additive();
        if (cur().kind != TokenKind::end) {
            fail("unexpected '" + cur().text + "'", {"end of input", "'+'", "'-'", "'^'", "'v'", "'*'"});
        }
        return e;
    }

   private:
    const Token& cur() const { return toks_[i_]; }
    bool is_op(std::string_view text) const {
        return (cur().kind == TokenKind::op || cur().kind == TokenKind::paren) && cur().text == text;
    }
    bool is_keyword(std::string_view text) const { return cur().kind == TokenKind::keyword && cur().text == text; }

    [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
        std::string where = cur().kind == TokenKind::end ? "unexpected end of input" : message;
        throw SyntaxError(cur().pos, where, std::move(expected));
    }

    void expect(std::string_view text) {
        if (!is_op(text)) {
            fail("unexpected '" + cur().text + "'", {"'" + std::string(text) + "'"});
        }
        ++i_;
    }

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& parser) : p(parser) {
            if (++p.depth_ > kMaxDepth) {
                throw SyntaxError(p.cur().pos, "expression nested too deeply");
            }
        }
        ~DepthGuard() { --p.depth_; }
    };

    ExprPtr additive() {
        DepthGuard guard(*this);
        ExprPtr lhs = vee_level();
        while (is_op("+") || is_op("-")) {
            Position pos = cur().pos;
            NodeKind kind = cur().text == "+" ? NodeKind::add : NodeKind::sub;
            ++i_;
            lhs = make(kind, pos, std::move(lhs), vee_level());
        }
        return lhs;
    }

    ExprPtr vee_level() {
        ExprPtr lhs = wedge_level();
        while (is_keyword("v")) {
            Position pos = cur().pos;
            ++i_;
            lhs = make(NodeKind::vee, pos, std::move(lhs), wedge_level());
        }
        return lhs;
    }

    ExprPtr wedge_level() {
        ExprPtr lhs = product();
        while (is_op("^")) {
            Position pos = cur().pos;
            ++i_;
            lhs = make(NodeKind::wedge, pos, std::move(lhs), product());
        }
        return lhs;
    }

    ExprPtr product() {
        ExprPtr lhs = unary();
        while (is_op("*")) {
            Position pos = cur().pos;
            ++i_;
            lhs = make(NodeKind::scalar_mul, pos, std::move(lhs), unary());
        }
        return lhs;
    }

    ExprPtr unary() {
        DepthGuard guard(*this);
        Position pos = cur().pos;
        if (is_op("-")) {
            ++i_;
            auto minus_one = make(NodeKind::scalar, pos);
            minus_one->value = -1.0;
            return make(NodeKind::scalar_mul, pos, std::move(minus_one), unary());
        }
        if (is_op("*")) {
            ++i_;
            return make(NodeKind::star, pos, atom());
        }
        if (is_op("~")) {
            ++i_;
            return make(NodeKind::conj, pos, atom());
        }
        return atom();
    }

    ExprPtr atom() {
        const Token& t = cur();
        switch (t.kind) {
            case TokenKind::basis: {
                ++i_;
                auto n = make(NodeKind::basis_vector, t.pos);
                n->index = t.index;
                return n;
            }
            case TokenKind::scalar: {
                ++i_;
                if (t.text == "1") {
                    return make(NodeKind::vacuum_one, t.pos);
                }
                auto n = make(NodeKind::scalar, t.pos);
                n->value = t.value;
                return n;
            }
            case TokenKind::identifier: {
                ++i_;
                auto n = make(NodeKind::var, t.pos);
                n->name = t.text;
                return n;
            }
            case TokenKind::keyword:
                if (t.text == "E") {
                    ++i_;
                    return make(NodeKind::top, t.pos);
                }
                if (t.text == "ip") {
                    ++i_;
                    expect("(");
                    ExprPtr lhs = additive();
                    expect(",");
                    ExprPtr rhs = additive();
                    expect(")");
                    return make(NodeKind::inner_product, t.pos, std::move(lhs), std::move(rhs));
                }
                break;
            case TokenKind::paren:
                if (t.text == "(") {
                    ++i_;
                    ExprPtr inner = additive();
                    expect(")");
                    return inner;
                }
                break;
            default:
                break;
        }
        fail("unexpected '" + t.text + "'", with_atoms({}));
    }

    const std::vector<Token>& toks_;
    size_t i_ = 0;
    int depth_ = 0;
};

const char* binary_name(NodeKind kind) {
    switch (kind) {
        case NodeKind::wedge:
            return "Wedge";
        case NodeKind::vee:
            return "Vee";
        case NodeKind::add:
            return "Add";
        case NodeKind::sub:
            return "Sub";
        case NodeKind::scalar_mul:
            return "ScalarMul";
        case NodeKind::inner_product:
            return "InnerProduct";
        default:
            return "?";
    }
}

const char* binary_symbol(NodeKind kind) {
    switch (kind) {
        case NodeKind::wedge:
            return " ^ ";
        case NodeKind::vee:
            return " v ";
        case NodeKind::add:
            return " + ";
        case NodeKind::sub:
            return " - ";
        default:
            return " * ";
    }
}

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

ExprPtr parse(std::string_view source) { return parse(tokenize(source)); }

std::string to_sexpr(const ExprNode& n) {
    switch (n.kind) {
        case NodeKind::basis_vector:
            return "e" + std::to_string(n.index);
        case NodeKind::vacuum_one:
            return "1";
        case NodeKind::top:
            return "E";
        case NodeKind::scalar:
            return format_coeff(n.value);
        case NodeKind::var:
            return n.name;
        case NodeKind::star:
            return "Star(" + to_sexpr(*n.lhs) + ")";
        case NodeKind::conj:
            return "Conj(" + to_sexpr(*n.lhs) + ")";
        default:
            return std::string(binary_name(n.kind)) + "(" + to_sexpr(*n.lhs) + "," + to_sexpr(*n.rhs) + ")";
    }
}

std::string to_source(const ExprNode& n) {
    switch (n.kind) {
        case NodeKind::basis_vector:
        case NodeKind::vacuum_one:
        case NodeKind::top:
        case NodeKind::var:
            return to_sexpr(n);
        case NodeKind::scalar: {
            // A bare 1 would read back as the vacuum blade.
            std::string text = format_coeff(n.value);
            if (text == "1") {
                return "1.0";
            }
            return text.front() == '-' ? "(" + text + ")" : text;
        }
        case NodeKind::star:
            return "*(" + to_source(*n.lhs) + ")";
        case NodeKind::conj:
            return "~(" + to_source(*n.lhs) + ")";
        case NodeKind::inner_product:
            return "ip(" + to_source(*n.lhs) + ", " + to_source(*n.rhs) + ")";
        case NodeKind::scalar_mul:
            if (n.lhs->kind == NodeKind::scalar && n.lhs->value == Coeff{-1.0}) {
                return "(-" + to_source(*n.rhs) + ")";
            }
            [[fallthrough]];
        default:
            return "(" + to_source(*n.lhs) + binary_symbol(n.kind) + to_source(*n.rhs) + ")";
    }
}

}  // namespace excalc::expr
