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

#include "excalc/expr/eval.h"

#include <cmath>
#include <optional>

#include "excalc/algebra.h"
#include "excalc/errors.h"

namespace excalc::expr {

void Environment::bind(const std::string& name, Multivector value) {
    std::vector<Token> toks = tokenize(name);
    if (toks.size() != 2 || toks[0].kind != TokenKind::identifier) {
        throw std::invalid_argument("'" + name + "' is not a valid variable name");
    }
    if (value.dim() != dim_) {
        throw DimensionMismatch("binding '" + name + "' has dimension " + std::to_string(value.dim().value()) +
                                ", environment has " + std::to_string(dim_.value()));
    }
    bindings_.insert_or_assign(name, std::move(value));
}

const Multivector* Environment::lookup(const std::string& name) const {
    auto it = bindings_.find(name);
    return it == bindings_.end() ? nullptr : &it->second;
}

Multivector to_multivector(const Value& v, Dim dim) {
    if (const Coeff* c = std::get_if<Coeff>(&v)) {
        return Multivector::scalar(dim, *c);
    }
    return std::get<Multivector>(v);
}

namespace {

// A number, or a multivector with nothing outside the scalar blade.
std::optional<Coeff> as_scalar(const Value& v) {
    if (const Coeff* c = std::get_if<Coeff>(&v)) {
        return *c;
    }
    const Multivector& m = std::get<Multivector>(v);
    if (m.is_zero() || (m.size() == 1 && m.terms().begin()->first.mask == 0)) {
        return m.coeff(Blade{0});
    }
    return std::nullopt;
}

// Runs a library call and prefixes any error it raises with the position of
// `n`, keeping the exception type.
template <typename F>
auto located(const ExprNode& n, F&& call) {
    auto where = [&](const std::exception& e) { return n.pos.to_string() + ": " + e.what(); };
    try {
        return call();
    } catch (const GradeError& e) {
        throw GradeError(where(e));
    } catch (const DimensionMismatch& e) {
        throw DimensionMismatch(where(e));
    } catch (const std::out_of_range& e) {
        throw std::out_of_range(where(e));
    } catch (const std::domain_error& e) {
        throw std::domain_error(where(e));
    }
}

Coeff finite(const ExprNode& n, Coeff c) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw EvalError(n.pos.to_string() + ": numeric overflow");
    }
    return c;
}

class Evaluator {
   public:
    explicit Evaluator(const Environment& env) : env_(env), dim_(env.dim()) {}

    Value operator()(const ExprNode& n) const {
        switch (n.kind) {
            case NodeKind::basis_vector:
                return located(n, [&] { return Multivector::basis_vector(dim_, n.index); });
            case NodeKind::vacuum_one:
                return Multivector::vacuum(dim_);
            case NodeKind::top:
                return Multivector::top(dim_);
            case NodeKind::scalar:
                return n.value;
            case NodeKind::var:
                if (const Multivector* m = env_.lookup(n.name)) {
                    return *m;
                }
                throw EvalError(n.pos.to_string() + ": unbound variable '" + n.name + "'");
            case NodeKind::wedge:
            case NodeKind::vee: {
                Multivector a = mv(*n.lhs);
                Multivector b = mv(*n.rhs);
                return located(n, [&] { return n.kind == NodeKind::wedge ? wedge(a, b) : vee(a, b); });
            }
            case NodeKind::star:
                return hodge(mv(*n.lhs));
            case NodeKind::conj: {
                Value x = (*this)(*n.lhs);
                if (const Coeff* c = std::get_if<Coeff>(&x)) {
                    return std::conj(*c);
                }
                return conjugate(std::get<Multivector>(x));
            }
            case NodeKind::add:
            case NodeKind::sub:
                return add_or_sub(n);
            case NodeKind::scalar_mul:
                return scale(n);
            case NodeKind::inner_product: {
                Multivector a = mv(*n.lhs);
                Multivector b = mv(*n.rhs);
                return located(n, [&] { return scalar_product(a, b); });
            }
        }
        throw EvalError("unknown expression node");
    }

   private:
    Multivector mv(const ExprNode& n) const {
        Value v = (*this)(n);
        return located(n, [&] { return to_multivector(v, dim_); });
    }

    Value add_or_sub(const ExprNode& n) const {
        Value a = (*this)(*n.lhs);
        Value b = (*this)(*n.rhs);
        bool plus = n.kind == NodeKind::add;
        if (std::holds_alternative<Coeff>(a) && std::holds_alternative<Coeff>(b)) {
            Coeff x = std::get<Coeff>(a);
            Coeff y = std::get<Coeff>(b);
            return finite(n, plus ? x + y : x - y);
        }
        return located(n, [&] {
            Multivector x = to_multivector(a, dim_);
            Multivector y = to_multivector(b, dim_);
            return plus ? x + y : x - y;
        });
    }

    Value scale(const ExprNode& n) const {
        Value a = (*this)(*n.lhs);
        Value b = (*this)(*n.rhs);
        if (std::holds_alternative<Coeff>(a) && std::holds_alternative<Coeff>(b)) {
            return finite(n, std::get<Coeff>(a) * std::get<Coeff>(b));
        }
        if (auto c = as_scalar(a)) {
            return located(n, [&] { return *c * to_multivector(b, dim_); });
        }
        if (auto c = as_scalar(b)) {
            return located(n, [&] { return *c * to_multivector(a, dim_); });
        }
        throw EvalError(n.pos.to_string() +
                        ": '*' scales by a scalar; use '^' or 'v' to combine multivectors");
    }

    const Environment& env_;
    Dim dim_;
};

}  // namespace

Value eval(const ExprNode& node, const Environment& env) { return Evaluator(env)(node); }

Value evaluate(std::string_view source, const Environment& env) { return eval(*parse(source), env); }

std::string format_value(const Value& v, Dim dim, OutputFormat fmt) {
    if (const Coeff* c = std::get_if<Coeff>(&v); c && fmt == OutputFormat::text) {
        return format_coeff(*c);
    }
    return format_mv(to_multivector(v, dim), fmt);
}

}  // namespace excalc::expr
