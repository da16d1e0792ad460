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

#include <cstdio>
#include <regex>

#include "criteria.h"
#include "excalc/expr/eval.h"
#include "excalc/expr/parser.h"
#include "expr_gen.h"
#include "random.h"

namespace excalc::acceptance {

namespace {

using testing::Rng;

const std::regex kPositioned(R"(^[0-9]+:[0-9]+: .+)");

std::string printable(const std::string& s) {
    std::string out;
    for (unsigned char c : s) {
        if (c >= 0x20 && c < 0x7f) {
            out += static_cast<char>(c);
        } else {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\x%02x", c);
            out += buf;
        }
    }
    return out;
}

}  // namespace

Outcome parser_robustness() {
    Tally t;
    Rng rng(1000);
    int accepted = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        Dim d = rng.dim(1, 4);
        std::string input = rng.coin(0.5) ? testing::random_bytes(rng, 40)
                                          : testing::random_expression(rng, d, 3);
        if (rng.coin(0.3) && !input.empty()) {
            input.erase(static_cast<size_t>(rng.uniform_int(0, static_cast<int>(input.size()) - 1)), 1);
        }
        expr::Environment env(d);
        try {
            expr::evaluate(input, env);
            ++accepted;
        } catch (const expr::SyntaxError& e) {
            bool ok = e.pos().line >= 1 && e.pos().column >= 1 && std::regex_search(e.what(), kPositioned);
            t.check(ok, "syntax error without a position for '" + printable(input) + "': " + e.what());
        } catch (const std::exception& e) {
            t.check(std::regex_search(e.what(), kPositioned),
                    "unpositioned error for '" + printable(input) + "': " + e.what());
        } catch (...) {
            t.check(false, "non-standard exception for '" + printable(input) + "'");
        }
    }

    int round_trips = 0;
    for (int attempt = 0; round_trips < 1000 && attempt < 20000; ++attempt) {
        Dim d = rng.dim(1, 4);
        std::string source = testing::random_expression(rng, d, 4);
        expr::Environment env(d);
        Multivector value(d);
        try {
            value = expr::to_multivector(expr::evaluate(source, env), d);
        } catch (const std::exception&) {
            continue;
        }
        ++round_trips;
        std::string printed = expr::format_value(value, d, OutputFormat::text);
        try {
            Multivector again = expr::to_multivector(expr::evaluate(printed, env), d);
            double scale = 1.0;
            for (const auto& [blade, c] : value.terms()) {
                scale = std::max(scale, std::abs(c));
            }
            t.check(max_abs_difference(value, again) <= 1e-12 * scale,
                    "'" + source + "' printed as '" + printed + "' reads back differently");
        } catch (const std::exception& e) {
            t.check(false, "'" + printed + "' does not parse back: " + e.what());
        }
        expr::ExprPtr tree = expr::parse(source);
        std::string canonical = expr::to_source(*tree);
        t.check(expr::to_sexpr(*expr::parse(canonical)) == expr::to_sexpr(*tree),
                "'" + source + "' changes shape when re-parsed from '" + canonical + "'");
    }
    t.check(round_trips == 1000, "only " + std::to_string(round_trips) + " evaluable expressions were generated");
    Outcome out = t.outcome("checks (100000 fuzzed inputs, 1000 round trips)");
    out.notes.push_back(std::to_string(accepted) + " fuzzed inputs evaluated without error");
    return out;
}

}  // namespace excalc::acceptance
