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

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "excalc/expr/parser.h"
#include "excalc/format.h"

namespace excalc::expr {

/// Unbound names and operand-type errors such as e1 * e2.
class EvalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bare numbers stay scalars until they meet a multivector.
using Value = std::variant<Multivector, Coeff>;

class Environment {
   public:
    explicit Environment(Dim dim) : dim_(dim) {}

    Dim dim() const { return dim_; }
    /// Throws DimensionMismatch, and std::invalid_argument for names that
    /// would lex as something other than an identifier.
    void bind(const std::string& name, Multivector value);
    const Multivector* lookup(const std::string& name) const;
    const std::map<std::string, Multivector>& bindings() const { return bindings_; }

   private:
    Dim dim_;
    std::map<std::string, Multivector> bindings_;
};

/// Throws EvalError, GradeError, DimensionMismatch and std::out_of_range.
Value eval(const ExprNode& node, const Environment& env);
/// parse + eval; also throws SyntaxError.
Value evaluate(std::string_view source, const Environment& env);

Multivector to_multivector(const Value& v, Dim dim);
std::string format_value(const Value& v, Dim dim, OutputFormat fmt);

}  // namespace excalc::expr
