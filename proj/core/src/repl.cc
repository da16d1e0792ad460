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

#include "excalc/repl.h"

#include <charconv>
#include <istream>
#include <ostream>

#include "excalc/table.h"

namespace excalc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

constexpr std::string_view kHelp =
    ":dim d | :let name = expr | :table wedge|vee|pseudo-wedge|pseudo-vee|q-wedge|q-vee | :quit";

}  // namespace

Repl::Reply Repl::handle(std::string_view line) {
    line = trim(line);
    if (line.empty()) {
        return {};
    }
    try {
        if (line.front() == ':') {
            return command(line);
        }
        expr::Value v = expr::evaluate(line, env_);
        return {expr::format_value(v, env_.dim(), OutputFormat::text)};
    } catch (const std::exception& e) {
        return {std::string("error: ") + e.what(), false};
    }
}

Repl::Reply Repl::command(std::string_view line) {
    auto space = line.find_first_of(" \t");
    std::string_view cmd = line.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? "" : trim(line.substr(space));

    if (cmd == ":quit" || cmd == ":q") {
        return {"", true, true};
    }
    if (cmd == ":help") {
        return {std::string(kHelp)};
    }
    if (cmd == ":dim") {
        int d = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
        if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
            return {"error: usage :dim d", false};
        }
        env_ = expr::Environment(Dim(d));
        return {"dim = " + std::to_string(d)};
    }
    if (cmd == ":let") {
        auto eq = rest.find('=');
        if (eq == std::string_view::npos) {
            return {"error: usage :let name = expr", false};
        }
        std::string name(trim(rest.substr(0, eq)));
        expr::Value v = expr::evaluate(rest.substr(eq + 1), env_);
        Multivector m = expr::to_multivector(v, env_.dim());
        env_.bind(name, m);
        return {name + " = " + to_text(m)};
    }
    if (cmd == ":table") {
        Table t = build_table(parse_table_op(rest), env_.dim());
        std::string text = render_table(t, OutputFormat::text);
        if (!text.empty() && text.back() == '\n') {
            text.pop_back();
        }
        return {text};
    }
    return {"error: unknown command " + std::string(cmd) + "; " + std::string(kHelp), false};
}

void Repl::run(std::istream& in, std::ostream& out, bool interactive) {
    std::string line;
    while (true) {
        if (interactive) {
            out << "excalc> " << std::flush;
        }
        if (!std::getline(in, line)) {
            break;
        }
        Reply r = handle(line);
        if (r.quit) {
            break;
        }
        if (!r.text.empty()) {
            out << r.text << "\n";
        }
    }
}

}  // namespace excalc
