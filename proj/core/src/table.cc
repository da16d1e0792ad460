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

#include "excalc/table.h"

#include <stdexcept>

#include "excalc/algebra.h"
#include "excalc/boolean_bridge.h"
#include "excalc/qubit.h"
#include "json.hpp"

namespace excalc {

namespace {

struct OpName {
    TableOp op;
    const char* name;
};

constexpr OpName kOpNames[] = {
    {TableOp::wedge, "wedge"},          {TableOp::vee, "vee"},         {TableOp::pseudo_wedge, "pseudo-wedge"},
    {TableOp::pseudo_vee, "pseudo-vee"}, {TableOp::q_wedge, "q-wedge"}, {TableOp::q_vee, "q-vee"},
};

Table algebra_table(TableOp op, Dim dim) {
    Table t{op, dim, {"A", "B", op == TableOp::wedge ? "A^B" : "AvB"}, {}};
    std::vector<Blade> basis = canonical_blades(dim);
    for (Blade a : basis) {
        for (Blade b : basis) {
            Multivector x = Multivector::blade(dim, a);
            Multivector y = Multivector::blade(dim, b);
            Multivector r = op == TableOp::wedge ? wedge(x, y) : vee(x, y);
            t.rows.push_back({format_blade(a, dim), format_blade(b, dim), to_text(r)});
        }
    }
    return t;
}

Table pseudo_table(TableOp op, Dim dim) {
    bool is_wedge = op == TableOp::pseudo_wedge;
    Table t{op, dim, {"A1", "A2", is_wedge ? "pseudo-wedge" : "pseudo-vee", is_wedge ? "union" : "intersection"}, {}};
    std::vector<SubsetState> subsets = all_subsets(dim);
    for (const auto& a2 : subsets) {
        for (const auto& a1 : subsets) {
            PartialResult r = is_wedge ? pseudo_wedge(a1, a2) : pseudo_vee(a1, a2);
            SubsetState gate = is_wedge ? bool_or(a1, a2) : bool_and(a1, a2);
            Cell partial = r ? Cell(r->to_string()) : std::nullopt;
            t.rows.push_back({a1.to_string(), a2.to_string(), partial, gate.to_string()});
        }
    }
    return t;
}

Table qubit_table(TableOp op, Dim dim) {
    bool is_wedge = op == TableOp::q_wedge;
    Table t{op, dim, {"s1", "s2", is_wedge ? "s1^s2" : "s1vs2"}, {}};
    std::vector<Blade> basis = canonical_blades(dim);
    for (Blade a : basis) {
        for (Blade b : basis) {
            QubitBasisState sa{dim, a.mask};
            QubitBasisState sb{dim, b.mask};
            QubitState x = QubitState::basis(sa);
            QubitState y = QubitState::basis(sb);
            QubitState r = is_wedge ? q_wedge(x, y) : q_vee(x, y);
            t.rows.push_back({sa.to_string(), sb.to_string(), to_text(r)});
        }
    }
    return t;
}

// Display width in code points, so kets line up.
size_t width(const std::string& s) {
    size_t n = 0;
    for (unsigned char c : s) {
        n += (c & 0xC0) != 0x80;
    }
    return n;
}

std::string render_text(const Table& t) {
    std::vector<size_t> w(t.columns.size());
    for (size_t c = 0; c < t.columns.size(); ++c) {
        w[c] = width(t.columns[c]);
        for (const auto& row : t.rows) {
            w[c] = std::max(w[c], width(row[c].value_or("")));
        }
    }
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (size_t c = 0; c < cells.size(); ++c) {
            std::string cell = cells[c];
            if (c + 1 < cells.size()) {
                cell += std::string(w[c] - width(cell) + 2, ' ');
            }
            out += cell;
        }
        while (!out.empty() && out.back() == ' ') {
            out.pop_back();
        }
        return out + "\n";
    };
    std::string out = line(t.columns);
    for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const Cell& cell : row) {
            cells.push_back(cell.value_or(""));
        }
        out += line(cells);
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? "\"\"" : std::string(1, c);
    }
    return out + "\"";
}

std::string render_csv(const Table& t) {
    std::string out;
    auto line = [&](auto&& cells, auto&& get) {
        for (size_t c = 0; c < cells.size(); ++c) {
            out += (c ? "," : "") + csv_field(get(cells[c]));
        }
        out += "\n";
    };
    line(t.columns, [](const std::string& s) { return s; });
    for (const auto& row : t.rows) {
        line(row, [](const Cell& cell) { return cell.value_or(""); });
    }
    return out;
}

std::string render_json(const Table& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const Cell& cell : row) {
            r.push_back(cell ? nlohmann::ordered_json(*cell) : nlohmann::ordered_json(nullptr));
        }
        rows.push_back(r);
    }
    nlohmann::ordered_json doc{{"op", to_string(t.op)}, {"dim", t.dim.value()}, {"columns", t.columns}, {"rows", rows}};
    return doc.dump() + "\n";
}

}  // namespace

TableOp parse_table_op(std::string_view name) {
    for (const auto& entry : kOpNames) {
        if (name == entry.name) {
            return entry.op;
        }
    }
    throw std::invalid_argument("unknown table op '" + std::string(name) +
                                "'; expected wedge, vee, pseudo-wedge, pseudo-vee, q-wedge or q-vee");
}

const char* to_string(TableOp op) {
    for (const auto& entry : kOpNames) {
        if (op == entry.op) {
            return entry.name;
        }
    }
    return "?";
}

Table build_table(TableOp op, Dim dim) {
    if (dim.value() > kMaxTableDim) {
        throw std::invalid_argument("tables are limited to d <= " + std::to_string(kMaxTableDim));
    }
    switch (op) {
        case TableOp::wedge:
        case TableOp::vee:
            return algebra_table(op, dim);
        case TableOp::pseudo_wedge:
        case TableOp::pseudo_vee:
            return pseudo_table(op, dim);
        case TableOp::q_wedge:
        case TableOp::q_vee:
            break;
    }
    return qubit_table(op, dim);
}

std::string render_table(const Table& t, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json:
            return render_json(t);
        case OutputFormat::csv:
            return render_csv(t);
        case OutputFormat::text:
            break;
    }
    return render_text(t);
}

}  // namespace excalc
