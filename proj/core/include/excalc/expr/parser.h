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

// Grammar, loosest binding first:
//
//   additive := vee (('+' | '-') vee)*
//   vee      := wedge ('v' wedge)*
//   wedge    := product ('^' product)*
//   product  := unary ('*' unary)*          binary '*' scales by a scalar
//   unary    := '-' unary | '*' atom | '~' atom | atom
//   atom     := eN | number | 'E' | name | 'ip' '(' additive ',' additive ')'
//             | '(' additive ')'
//
// The literal 1 denotes the vacuum blade.

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "excalc/expr/token.h"

namespace excalc::expr {

enum class NodeKind {
    basis_vector,
    vacuum_one,
    top,
    scalar,
    var,
    wedge,
    vee,
    star,
    conj,
    add,
    sub,
    scalar_mul,
    inner_product,
};

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
    NodeKind kind;
    Position pos;
    int index = 0;     // basis_vector
    Coeff value{};     // scalar
    std::string name;  // var
    ExprPtr lhs;       // also the operand of star and conj
    ExprPtr rhs;
};

/// Throws SyntaxError.
ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse(std::string_view source);

/// Debug form such as "Vee(Wedge(e1,e2),e3)".
std::string to_sexpr(const ExprNode& node);

/// Fully parenthesized source text that evaluates to the same value. Trees
/// produced by parse() read back unchanged, up to complex literals.
std::string to_source(const ExprNode& node);

}  // namespace excalc::expr
