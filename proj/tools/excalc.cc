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

// Command line front end.
//
// Exit status: 0 success, 1 evaluation or usage error, 2 syntax error,
// 3 reference verification failure.

#include <unistd.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "excalc/expr/eval.h"
#include "excalc/fock.h"
#include "excalc/repl.h"
#include "excalc/table.h"
#include "excalc/verify.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEval = 1;
constexpr int kExitSyntax = 2;
constexpr int kExitVerify = 3;

// EXCALC_TOL overrides the comparison tolerance.
double comparison_tolerance() {
    const char* env = std::getenv("EXCALC_TOL");
    if (env == nullptr || *env == '\0') {
        return excalc::kPruneTolerance;
    }
    std::string_view text(env);
    double tol = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), tol);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !(tol >= 0)) {
        throw std::invalid_argument("EXCALC_TOL must be a non-negative number, got '" + std::string(text) + "'");
    }
    return tol;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// NAME=PATH, PATH holding extensor factors as JSON.
void bind_factors(excalc::expr::Environment& env, const std::string& spec) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw std::invalid_argument("--factors expects NAME=PATH, got '" + spec + "'");
    }
    excalc::ExtensorFactors x = excalc::factors_from_json(read_file(spec.substr(eq + 1)));
    env.bind(spec.substr(0, eq), excalc::expand(x));
}

std::string render_matrix(const excalc::ComplexMatrix& m, excalc::Dim dim, excalc::OutputFormat fmt) {
    std::vector<std::string> labels;
    for (excalc::Blade b : excalc::canonical_blades(dim)) {
        labels.push_back(excalc::format_blade(b, dim));
    }
    if (fmt == excalc::OutputFormat::json) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (size_t r = 0; r < m.rows(); ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (size_t c = 0; c < m.cols(); ++c) {
                row.push_back({{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
            }
            rows.push_back(row);
        }
        return nlohmann::ordered_json{{"dim", dim.value()}, {"basis", labels}, {"matrix", rows}}.dump() + "\n";
    }
    std::string sep = fmt == excalc::OutputFormat::csv ? "," : "\t";
    std::string out = fmt == excalc::OutputFormat::csv ? "row" : "";
    for (const auto& l : labels) {
        out += sep + l;
    }
    out += "\n";
    for (size_t r = 0; r < m.rows(); ++r) {
        out += labels[r];
        for (size_t c = 0; c < m.cols(); ++c) {
            out += sep + excalc::format_coeff(m(r, c));
        }
        out += "\n";
    }
    return out;
}

int run_eval(int dim, const std::string& source, const std::string& format,
             const std::vector<std::string>& factors) {
    excalc::expr::Environment env{excalc::Dim(dim)};
    for (const auto& f : factors) {
        bind_factors(env, f);
    }
    excalc::expr::Value v = excalc::expr::evaluate(source, env);
    std::string text = excalc::expr::format_value(v, env.dim(), excalc::parse_output_format(format));
    std::cout << text << (text.ends_with('\n') ? "" : "\n");
    return kExitOk;
}

int run_verify() {
    excalc::VerifyReport report = excalc::verify_reference(excalc::AlgebraOps::standard(), comparison_tolerance());
    std::cout << report.to_text();
    return report.all_passed() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exterior calculus of fermionic states"};
    app.require_subcommand(1);

    int dim = 2;
    std::string format = "text";
    std::string source;
    std::vector<std::string> factors;
    std::string op;
    std::string matrix;

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
    eval_cmd->add_option("--dim", dim, "Dimension d of the one-particle space")->required();
    eval_cmd->add_option("expr", source, "Expression, e.g. \"(e1^e2) v (e3^e4^e1)\"")->required();
    eval_cmd->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    eval_cmd->add_option("--factors", factors, "Bind NAME to the extensor whose factors are in JSON file PATH")
        ->type_name("NAME=PATH");

    auto* table_cmd = app.add_subcommand("table", "Print an operation over all pairs of basis elements");
    table_cmd->add_option("--op", op, "wedge, vee, pseudo-wedge, pseudo-vee, q-wedge or q-vee")->required();
    table_cmd->add_option("--dim", dim, "Dimension d <= 6")->required();
    table_cmd->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

    auto* repl_cmd = app.add_subcommand("repl", "Interactive session");
    repl_cmd->add_option("--dim", dim, "Initial dimension");

    auto* verify_cmd = app.add_subcommand("verify-paper", "Check the reference tables and worked examples");

    auto* fock_cmd = app.add_subcommand("fock", "Print a ladder operator as a matrix on the blade basis");
    fock_cmd->add_option("--matrix", matrix, "create:i or annihilate:i")->required();
    fock_cmd->add_option("--dim", dim, "Dimension d <= 8")->required();
    fock_cmd->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitEval;
    }

    try {
        if (*eval_cmd) {
            return run_eval(dim, source, format, factors);
        }
        if (*table_cmd) {
            excalc::Table t = excalc::build_table(excalc::parse_table_op(op), excalc::Dim(dim));
            std::cout << excalc::render_table(t, excalc::parse_output_format(format));
            return kExitOk;
        }
        if (*repl_cmd) {
            excalc::Repl repl{excalc::Dim(dim)};
            repl.run(std::cin, std::cout, isatty(STDIN_FILENO) != 0);
            return kExitOk;
        }
        if (*verify_cmd) {
            return run_verify();
        }
        if (*fock_cmd) {
            excalc::Dim d(dim);
            excalc::ComplexMatrix m = excalc::operator_matrix(excalc::LadderOp::parse(matrix), d);
            std::cout << render_matrix(m, d, excalc::parse_output_format(format));
            return kExitOk;
        }
    } catch (const excalc::expr::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kExitSyntax;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    }
    return kExitEval;
}
