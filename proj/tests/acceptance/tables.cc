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

// The three basis tables in d = 2, cell by cell.

#include <algorithm>

#include "criteria.h"
#include "excalc/algebra.h"
#include "excalc/boolean_bridge.h"
#include "excalc/expr/eval.h"
#include "excalc/qubit.h"
#include "excalc/table.h"

namespace excalc::acceptance {

namespace {

constexpr double kTol = 1e-12;

Multivector value_of(const std::string& text, Dim d) {
    expr::Environment env(d);
    return expr::to_multivector(expr::evaluate(text, env), d);
}

struct JoinRow {
    const char* a;
    const char* b;
    const char* wedge;
    const char* vee;
};

constexpr JoinRow kJoinRows[] = {
    {"1", "1", "1", "0"},    {"1", "e1", "e1", "0"},   {"1", "e2", "e2", "0"},  {"1", "E", "E", "1"},
    {"e1", "1", "e1", "0"},  {"e1", "e1", "0", "0"},   {"e1", "e2", "E", "1"},  {"e1", "E", "0", "e1"},
    {"e2", "1", "e2", "0"},  {"e2", "e1", "-E", "-1"}, {"e2", "e2", "0", "0"},  {"e2", "E", "0", "e2"},
    {"E", "1", "E", "1"},    {"E", "e1", "0", "e1"},   {"E", "e2", "0", "e2"},  {"E", "E", "0", "E"},
};

// Columns: A1, A2, union, intersection, pseudo-wedge, pseudo-vee; "" is blank.
struct SetRow {
    const char* a1;
    const char* a2;
    const char* cup;
    const char* cap;
    const char* meet;
    const char* join;
};

constexpr SetRow kSetRows[] = {
    {"{}", "{}", "{}", "{}", "{}", ""},
    {"{1}", "{}", "{1}", "{}", "{1}", ""},
    {"{2}", "{}", "{2}", "{}", "{2}", ""},
    {"{1,2}", "{}", "{1,2}", "{}", "{1,2}", "{}"},
    {"{}", "{1}", "{1}", "{}", "{1}", ""},
    {"{1}", "{1}", "{1}", "{1}", "", ""},
    {"{2}", "{1}", "{1,2}", "{}", "", ""},
    {"{1,2}", "{1}", "{1,2}", "{1}", "", "{1}"},
    {"{}", "{2}", "{2}", "{}", "{2}", ""},
    {"{1}", "{2}", "{1,2}", "{}", "{1,2}", "{}"},
    {"{2}", "{2}", "{2}", "{2}", "", ""},
    {"{1,2}", "{2}", "{1,2}", "{2}", "", "{2}"},
    {"{}", "{1,2}", "{1,2}", "{}", "{1,2}", "{}"},
    {"{1}", "{1,2}", "{1,2}", "{1}", "", "{1}"},
    {"{2}", "{1,2}", "{1,2}", "{2}", "", "{2}"},
    {"{1,2}", "{1,2}", "{1,2}", "{1,2}", "", "{1,2}"},
};

using Listing = std::vector<std::pair<std::string, std::string>>;

const Listing kMeetDomain = {{"{}", "{}"},  {"{1}", "{}"}, {"{2}", "{}"},  {"{1,2}", "{}"},
                             {"{}", "{1}"}, {"{}", "{2}"}, {"{1}", "{2}"}, {"{}", "{1,2}"}};
const Listing kJoinDomain = {{"{1,2}", "{}"},  {"{1,2}", "{1}"}, {"{1}", "{2}"},   {"{1,2}", "{2}"},
                             {"{}", "{1,2}"},  {"{1}", "{1,2}"}, {"{2}", "{1,2}"}, {"{1,2}", "{1,2}"}};

// Qubit kets written as "|b1,b2>" plus the expected results.
struct QubitRow {
    const char* s1;
    const char* s2;
    const char* wedge;
    const char* vee;
};

constexpr QubitRow kQubitRows[] = {
    {"00", "00", "|00>", "0"},   {"00", "10", "|10>", "0"},   {"00", "01", "|01>", "0"},
    {"00", "11", "|11>", "|00>"}, {"10", "00", "|10>", "0"},  {"10", "10", "0", "0"},
    {"10", "01", "|11>", "|00>"}, {"10", "11", "0", "|10>"},  {"01", "00", "|01>", "0"},
    {"01", "10", "-|11>", "-|00>"}, {"01", "01", "0", "0"},  {"01", "11", "0", "|01>"},
    {"11", "00", "|11>", "|00>"}, {"11", "10", "0", "|10>"},  {"11", "01", "0", "|01>"},
    {"11", "11", "0", "|11>"},
};

// "-|11>" -> -1 * basis state; "0" -> zero state.
QubitState expected_state(std::string text, Dim d) {
    if (text == "0") {
        return QubitState(d);
    }
    double sign = 1;
    if (text.front() == '-') {
        sign = -1;
        text.erase(0, 1);
    }
    return QubitState::basis(QubitBasisState::parse(text), sign);
}

std::string ket_text(std::string text) {
    // The library prints kets with U+27E9.
    if (!text.empty() && text.back() == '>') {
        text.back() = '\xE2';
        text += "\x9F\xA9";
    }
    return text;
}

std::string rendered(const std::optional<std::string>& cell) { return cell.value_or(""); }

}  // namespace

Outcome reference_join_table() {
    Dim d(2);
    Tally t;
    Table wedges = build_table(TableOp::wedge, d);
    Table vees = build_table(TableOp::vee, d);
    t.check(wedges.rows.size() == 16 && vees.rows.size() == 16, "table has 16 rows");
    for (size_t i = 0; i < std::size(kJoinRows) && i < wedges.rows.size(); ++i) {
        const JoinRow& r = kJoinRows[i];
        std::string pair = std::string(r.a) + "," + r.b;
        t.check(rendered(wedges.rows[i][0]) == r.a && rendered(wedges.rows[i][1]) == r.b, "row order " + pair);
        t.check(rendered(wedges.rows[i][2]) == r.wedge, pair + " ^ gave " + rendered(wedges.rows[i][2]));
        t.check(rendered(vees.rows[i][2]) == r.vee, pair + " v gave " + rendered(vees.rows[i][2]));
        Multivector a = value_of(r.a, d);
        Multivector b = value_of(r.b, d);
        t.check(equal_approx(wedge(a, b), value_of(r.wedge, d), kTol), pair + " ^ coefficients");
        t.check(equal_approx(vee(a, b), value_of(r.vee, d), kTol), pair + " v coefficients");
    }
    return t.outcome("cells (16 wedge + 16 vee entries, text and coefficients)");
}

Outcome reference_set_table() {
    Dim d(2);
    Tally t;
    auto listing = [](const std::vector<SubsetPair>& pairs) {
        Listing out;
        for (const auto& [a, b] : pairs) {
            out.emplace_back(a.to_string(), b.to_string());
        }
        return out;
    };
    Listing meets = listing(domain_d1(d));
    Listing joins = listing(domain_d2(d));
    t.check(meets == kMeetDomain, "pseudo-wedge domain differs from the 8-pair listing");
    t.check(joins == kJoinDomain, "pseudo-vee domain differs from the 8-pair listing");

    Table pw = build_table(TableOp::pseudo_wedge, d);
    Table pv = build_table(TableOp::pseudo_vee, d);
    std::vector<SubsetState> subsets = all_subsets(d);
    auto find = [&](const std::string& text) {
        return *std::find_if(subsets.begin(), subsets.end(), [&](const SubsetState& s) { return s.to_string() == text; });
    };
    for (size_t i = 0; i < std::size(kSetRows); ++i) {
        const SetRow& r = kSetRows[i];
        std::string pair = std::string("(") + r.a1 + "," + r.a2 + ")";
        SubsetState a1 = find(r.a1);
        SubsetState a2 = find(r.a2);
        t.check(bool_or(a1, a2).to_string() == r.cup, "union " + pair);
        t.check(bool_and(a1, a2).to_string() == r.cap, "intersection " + pair);
        PartialResult m = pseudo_wedge(a1, a2);
        PartialResult j = pseudo_vee(a1, a2);
        t.check((m ? m->to_string() : "") == std::string(r.meet), "pseudo-wedge " + pair);
        t.check((j ? j->to_string() : "") == std::string(r.join), "pseudo-vee " + pair);
        if (m) {
            t.check(*m == bool_or(a1, a2), "pseudo-wedge is the union on its domain " + pair);
        }
        if (j) {
            t.check(*j == bool_and(a1, a2), "pseudo-vee is the intersection on its domain " + pair);
        }
        t.check(rendered(pw.rows[i][0]) == r.a1 && rendered(pw.rows[i][1]) == r.a2, "table row order " + pair);
        t.check(rendered(pw.rows[i][2]) == r.meet && rendered(pw.rows[i][3]) == r.cup, "table pseudo-wedge " + pair);
        t.check(rendered(pv.rows[i][2]) == r.join && rendered(pv.rows[i][3]) == r.cap, "table pseudo-vee " + pair);
    }
    return t.outcome("checks (both domains, 16 rows x 4 columns)");
}

Outcome reference_qubit_table() {
    Dim d(2);
    Tally t;
    Table qw = build_table(TableOp::q_wedge, d);
    Table qv = build_table(TableOp::q_vee, d);
    int cells = 0;
    for (size_t i = 0; i < std::size(kQubitRows); ++i) {
        const QubitRow& r = kQubitRows[i];
        std::string pair = std::string("|") + r.s1 + ">,|" + r.s2 + ">";
        QubitState s1 = QubitState::basis(QubitBasisState::parse(r.s1));
        QubitState s2 = QubitState::basis(QubitBasisState::parse(r.s2));
        QubitState w = q_wedge(s1, s2);
        QubitState v = q_vee(s1, s2);
        t.check(equal_approx(w, expected_state(r.wedge, d), kTol), pair + " wedge");
        t.check(equal_approx(v, expected_state(r.vee, d), kTol), pair + " vee");
        t.check(is_physically_impossible(w) == (std::string(r.wedge) == "0"), pair + " wedge impossibility");
        t.check(is_physically_impossible(v) == (std::string(r.vee) == "0"), pair + " vee impossibility");
        t.check(rendered(qw.rows[i][0]) == ket_text(std::string("|") + r.s1 + ">"), pair + " row order");
        t.check(rendered(qw.rows[i][2]) == ket_text(r.wedge), pair + " wedge cell " + rendered(qw.rows[i][2]));
        t.check(rendered(qv.rows[i][2]) == ket_text(r.vee), pair + " vee cell " + rendered(qv.rows[i][2]));
        cells += 2;
    }
    Outcome out = t.outcome("checks over " + std::to_string(cells) + " entries");
    return out;
}

}  // namespace excalc::acceptance
