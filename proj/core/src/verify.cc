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

#include "excalc/verify.h"

#include <array>

#include "excalc/algebra.h"
#include "excalc/boolean_bridge.h"
#include "excalc/extensor.h"
#include "excalc/fock.h"
#include "excalc/format.h"
#include "excalc/qubit.h"

namespace excalc {

AlgebraOps AlgebraOps::standard() {
    return AlgebraOps{
        [](const Multivector& a, const Multivector& b) { return excalc::wedge(a, b); },
        [](const Multivector& a) { return excalc::hodge(a); },
        [](const Multivector& a) { return excalc::hodge_inverse(a); },
    };
}

Multivector AlgebraOps::vee(const Multivector& a, const Multivector& b) const {
    return hodge_inverse(wedge(hodge(a), hodge(b)));
}

bool VerifyReport::all_passed() const {
    for (const auto& g : groups) {
        if (!g.passed()) {
            return false;
        }
    }
    return true;
}

std::string VerifyReport::to_text() const {
    std::string out;
    int failed = 0;
    for (const auto& g : groups) {
        int ok = g.total - static_cast<int>(g.failures.size());
        out += std::string(g.passed() ? "PASS" : "FAIL") + "  " + g.name + " (" + std::to_string(ok) + "/" +
               std::to_string(g.total) + ")\n";
        for (const auto& f : g.failures) {
            out += "      " + f + "\n";
        }
        failed += !g.passed();
    }
    out += std::to_string(groups.size() - failed) + "/" + std::to_string(groups.size()) + " groups passed\n";
    return out;
}

namespace {

class Group {
   public:
    Group(std::string name, double tol) : tol_(tol) { g_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++g_.total;
        if (!ok) {
            g_.failures.push_back(what);
        }
    }

    void same(const Multivector& got, const Multivector& want, const std::string& what) {
        check(equal_approx(got, want, tol_), what + ": got " + to_text(got) + ", expected " + to_text(want));
    }

    void same_text(const std::string& got, const std::string& want, const std::string& what) {
        check(got == want, what + ": got " + got + ", expected " + want);
    }

    CheckGroup done() { return std::move(g_); }

   private:
    CheckGroup g_;
    double tol_;
};

Multivector blade(Dim d, Blade b) { return Multivector::blade(d, b); }

std::string name(Blade b, Dim d) { return format_blade(b, d); }

// Determinant of the factor vectors of two blades with coefficients ca, cb.
Coeff blade_pair_det(Dim d, Blade a, Coeff ca, Blade b, Coeff cb) {
    std::vector<VectorC> cols;
    for (int i : a.indices()) {
        cols.push_back(VectorC::basis(d, i));
    }
    for (int i : b.indices()) {
        cols.push_back(VectorC::basis(d, i));
    }
    return ca * cb * det_columns(cols);
}

// The single blade and coefficient of a one-term multivector.
std::pair<Blade, Coeff> single_term(const Multivector& m) {
    if (m.size() != 1) {
        return {Blade{0}, Coeff{}};
    }
    return *m.terms().begin();
}

CheckGroup relation_table(const AlgebraOps& ops, double tol) {
    Group g("Table I relations (d = 2..4, all basis blades)", tol);
    for (int dv = 2; dv <= 4; ++dv) {
        Dim d(dv);
        std::vector<Blade> basis = canonical_blades(d);
        Multivector one = Multivector::vacuum(d);
        Multivector top = Multivector::top(d);
        std::string at = " (d=" + std::to_string(dv) + ")";

        Multivector chain = one;
        for (int i = 1; i <= dv; ++i) {
            chain = ops.wedge(chain, Multivector::basis_vector(d, i));
        }
        g.same(chain, top, "e1^...^ed = E" + at);
        g.same(ops.wedge(one, top), top, "1^E = E" + at);
        g.same(ops.vee(one, top), one, "1vE = 1" + at);
        g.same(ops.wedge(one, one), one, "1^1 = 1" + at);
        g.same(ops.vee(one, one), Multivector(d), "1v1 = 0" + at);
        g.same(ops.wedge(top, top), Multivector(d), "E^E = 0" + at);
        g.same(ops.vee(top, top), top, "EvE = E" + at);

        for (Blade a : basis) {
            Multivector A = blade(d, a);
            int k = a.step();
            std::string an = name(a, d);
            g.same(ops.wedge(A, one), A, an + "^1 = " + an + at);
            g.same(ops.vee(A, top), A, an + "vE = " + an + at);
            if (k >= 1) {
                g.same(ops.wedge(A, top), Multivector(d), an + "^E = 0" + at);
                g.same(ops.wedge(A, A), Multivector(d), an + "^" + an + " = 0" + at);
            }
            if (k <= dv - 1) {
                g.same(ops.vee(A, one), Multivector(d), an + "v1 = 0" + at);
                g.same(ops.vee(A, A), Multivector(d), an + "v" + an + " = 0" + at);
            }
            auto [sb, sc] = single_term(ops.hodge(A));
            Coeff dstar = blade_pair_det(d, a, 1.0, sb, sc);
            g.same(ops.wedge(A, ops.hodge(A)), dstar * top, an + "^*" + an + " = det E" + at);
            g.same(ops.vee(A, ops.hodge(A)), Multivector::scalar(d, dstar), an + "v*" + an + " = det" + at);

            for (Blade b : basis) {
                Multivector B = blade(d, b);
                int l = b.step();
                std::string pair = "(" + an + ", " + name(b, d) + ")" + at;
                double ws = ((k * l) % 2) ? -1.0 : 1.0;
                double vs = (((dv - k) * (dv - l)) % 2) ? -1.0 : 1.0;
                g.same(ops.wedge(A, B), ws * ops.wedge(B, A), "graded commutativity of ^ " + pair);
                g.same(ops.vee(A, B), vs * ops.vee(B, A), "graded commutativity of v " + pair);
                g.same(ops.hodge(ops.wedge(A, B)), ops.vee(ops.hodge(A), ops.hodge(B)), "*(A^B) = *A v *B " + pair);
                g.same(ops.hodge(ops.vee(A, B)), ops.wedge(ops.hodge(A), ops.hodge(B)), "*(AvB) = *A ^ *B " + pair);
                if (k + l == dv) {
                    Coeff det = blade_pair_det(d, a, 1.0, b, 1.0);
                    Multivector join = ops.vee(A, B);
                    g.same(ops.wedge(A, B), ops.wedge(join, top), "A^B = (AvB)E " + pair);
                    g.same(ops.wedge(A, B), det * top, "A^B = det(A,B)E " + pair);
                    g.same(join, Multivector::scalar(d, det), "AvB = det(A,B) " + pair);
                }
                if (dv <= 3) {
                    for (Blade c : basis) {
                        Multivector C = blade(d, c);
                        std::string triple = "(" + an + ", " + name(b, d) + ", " + name(c, d) + ")" + at;
                        g.same(ops.wedge(A, ops.wedge(B, C)), ops.wedge(ops.wedge(A, B), C),
                               "associativity of ^ " + triple);
                        g.same(ops.vee(A, ops.vee(B, C)), ops.vee(ops.vee(A, B), C), "associativity of v " + triple);
                    }
                }
            }
        }
    }
    return g.done();
}

struct AlgebraRow {
    const char* a;
    const char* b;
    const char* wedge;
    const char* vee;
};

// Rows in canonical order of (A, B) over 1, e1, e2, E.
constexpr std::array<AlgebraRow, 16> kTwoModeTable = {{
    {"1", "1", "1", "0"},   {"1", "e1", "e1", "0"},  {"1", "e2", "e2", "0"},   {"1", "E", "E", "1"},
    {"e1", "1", "e1", "0"}, {"e1", "e1", "0", "0"},  {"e1", "e2", "E", "1"},   {"e1", "E", "0", "e1"},
    {"e2", "1", "e2", "0"}, {"e2", "e1", "-E", "-1"}, {"e2", "e2", "0", "0"},  {"e2", "E", "0", "e2"},
    {"E", "1", "E", "1"},   {"E", "e1", "0", "e1"},  {"E", "e2", "0", "e2"},   {"E", "E", "0", "E"},
}};

CheckGroup two_mode_table(const AlgebraOps& ops, double tol) {
    Group g("Table II wedge and vee (d = 2)", tol);
    Dim d(2);
    std::vector<Blade> basis = canonical_blades(d);
    size_t row = 0;
    for (Blade a : basis) {
        for (Blade b : basis) {
            const AlgebraRow& want = kTwoModeTable[row++];
            std::string pair = "(" + name(a, d) + ", " + name(b, d) + ")";
            g.same_text(name(a, d) + "," + name(b, d), std::string(want.a) + "," + want.b, "row order " + pair);
            g.same_text(to_text(ops.wedge(blade(d, a), blade(d, b))), want.wedge, "A^B " + pair);
            g.same_text(to_text(ops.vee(blade(d, a), blade(d, b))), want.vee, "AvB " + pair);
        }
    }
    return g.done();
}

CheckGroup subset_table(const AlgebraOps& ops, double tol) {
    Group g("Table III pseudo-wedge and pseudo-vee (d = 2)", tol);
    Dim d(2);
    using Pair = std::pair<std::string, std::string>;
    // Second element in the outer loop, as listed in the reference.
    const std::vector<Pair> want_d1 = {{"{}", "{}"},   {"{1}", "{}"},  {"{2}", "{}"},  {"{1,2}", "{}"},
                                       {"{}", "{1}"},  {"{}", "{2}"},  {"{1}", "{2}"}, {"{}", "{1,2}"}};
    const std::vector<Pair> want_d2 = {{"{1,2}", "{}"},  {"{1,2}", "{1}"}, {"{1}", "{2}"},   {"{1,2}", "{2}"},
                                       {"{}", "{1,2}"},  {"{1}", "{1,2}"}, {"{2}", "{1,2}"}, {"{1,2}", "{1,2}"}};
    std::vector<Pair> got_d1;
    std::vector<Pair> got_d2;
    for (const auto& a2 : all_subsets(d)) {
        for (const auto& a1 : all_subsets(d)) {
            Pair p{a1.to_string(), a2.to_string()};
            std::string pair = "(" + p.first + ", " + p.second + ")";
            PartialResult w = m_inverse(ops.wedge(m_map(a1), m_map(a2)), tol);
            PartialResult v = m_inverse(ops.vee(m_map(a1), m_map(a2)), tol);
            if (w) {
                got_d1.push_back(p);
                g.same_text(w->to_string(), bool_or(a1, a2).to_string(), "pseudo-wedge equals union " + pair);
            }
            if (v) {
                got_d2.push_back(p);
                g.same_text(v->to_string(), bool_and(a1, a2).to_string(),
                            "pseudo-vee equals intersection " + pair);
            }
        }
    }
    auto listing = [](const std::vector<Pair>& ps) {
        std::string out;
        for (const auto& [a, b] : ps) {
            out += "(" + a + "," + b + ")";
        }
        return out;
    };
    g.same_text(listing(got_d1), listing(want_d1), "domain of pseudo-wedge");
    g.same_text(listing(got_d2), listing(want_d2), "domain of pseudo-vee");
    return g.done();
}

CheckGroup qubit_table(const AlgebraOps& ops, double tol) {
    Group g("Table IV qubit wedge and vee (d = 2)", tol);
    // Rows in the reference order |00>, |10>, |01>, |11> for both operands.
    const std::array<const char*, 4> kets = {"|00⟩", "|10⟩", "|01⟩", "|11⟩"};
    const std::array<std::array<const char*, 2>, 16> want = {{
        {"|00⟩", "0"},  {"|10⟩", "0"},  {"|01⟩", "0"},  {"|11⟩", "|00⟩"},
        {"|10⟩", "0"},  {"0", "0"},     {"|11⟩", "|00⟩"}, {"0", "|10⟩"},
        {"|01⟩", "0"},  {"-|11⟩", "-|00⟩"}, {"0", "0"}, {"0", "|01⟩"},
        {"|11⟩", "|00⟩"}, {"0", "|10⟩"}, {"0", "|01⟩"}, {"0", "|11⟩"},
    }};
    size_t row = 0;
    for (const char* s1 : kets) {
        for (const char* s2 : kets) {
            Multivector x = n_map(QubitBasisState::parse(s1));
            Multivector y = n_map(QubitBasisState::parse(s2));
            std::string pair = std::string("(") + s1 + ", " + s2 + ")";
            g.same_text(to_text(n_inverse(ops.wedge(x, y))), want[row][0], "s1^s2 " + pair);
            g.same_text(to_text(n_inverse(ops.vee(x, y))), want[row][1], "s1vs2 " + pair);
            ++row;
        }
    }
    return g.done();
}

// Fixed generic coefficients for the symbolic examples.
const Coeff kAlpha{1.0, 2.0};
const Coeff kBeta{-0.5, 1.0};
const Coeff kGamma{2.0, -1.0};
const Coeff kDelta{0.25, 3.0};

Multivector two_fermion_x(const AlgebraOps& ops, Dim d) {
    Multivector u = kAlpha * Multivector::basis_vector(d, 1) + kBeta * Multivector::basis_vector(d, 2);
    Multivector w = kGamma * Multivector::basis_vector(d, 2) + kDelta * Multivector::basis_vector(d, 3);
    return ops.wedge(u, w);
}

Multivector mv(Dim d, std::initializer_list<int> idx, Coeff c = 1.0) {
    return c * Multivector::from_indices(d, idx);
}

std::vector<CheckGroup> worked_examples(const AlgebraOps& ops, double tol) {
    std::vector<CheckGroup> out;
    {
        Group g("Example: Hodge star in d = 2", tol);
        Dim d(2);
        g.same(ops.hodge(Multivector::vacuum(d)), Multivector::top(d), "*1 = E");
        g.same(ops.hodge(mv(d, {1})), mv(d, {2}), "*e1 = e2");
        g.same(ops.hodge(mv(d, {2})), mv(d, {1}, -1.0), "*e2 = -e1");
        g.same(ops.hodge(Multivector::top(d)), Multivector::vacuum(d), "*E = 1");
        out.push_back(g.done());
    }
    {
        Group g("Example: Hodge star in d = 3", tol);
        Dim d(3);
        g.same(ops.hodge(Multivector::vacuum(d)), Multivector::top(d), "*1 = E");
        g.same(ops.hodge(mv(d, {1})), mv(d, {2, 3}), "*e1 = e2^e3");
        g.same(ops.hodge(mv(d, {2})), mv(d, {1, 3}, -1.0), "*e2 = -e1^e3");
        g.same(ops.hodge(mv(d, {3})), mv(d, {1, 2}), "*e3 = e1^e2");
        g.same(ops.hodge(mv(d, {1, 2})), mv(d, {3}), "*(e1^e2) = e3");
        g.same(ops.hodge(mv(d, {1, 3})), mv(d, {2}, -1.0), "*(e1^e3) = -e2");
        g.same(ops.hodge(mv(d, {2, 3})), mv(d, {1}), "*(e2^e3) = e1");
        g.same(ops.hodge(Multivector::top(d)), Multivector::vacuum(d), "*E = 1");
        out.push_back(g.done());
    }
    {
        Group g("Example: two-fermion superposition in d = 3", tol);
        Dim d(3);
        Multivector want = mv(d, {1, 2}, kAlpha * kGamma) + mv(d, {1, 3}, kAlpha * kDelta) +
                           mv(d, {2, 3}, kBeta * kDelta);
        g.same(two_fermion_x(ops, d), want, "X = ag e1^e2 + ad e1^e3 + bd e2^e3");
        out.push_back(g.done());
    }
    {
        Group g("Example: X ^ e1 in d = 3", tol);
        Dim d(3);
        g.same(ops.wedge(two_fermion_x(ops, d), mv(d, {1})), kBeta * kDelta * Multivector::top(d), "X^e1 = bd E");
        out.push_back(g.done());
    }
    {
        Group g("Example: X v Z in d = 3", tol);
        Dim d(3);
        Multivector z = mv(d, {1, 2});
        g.same(ops.vee(mv(d, {1, 2}), z), Multivector(d), "(e1^e2) v (e1^e2) = 0");
        g.same(ops.vee(mv(d, {1, 3}), z), mv(d, {1}, -1.0), "(e1^e3) v (e1^e2) = -e1");
        g.same(ops.vee(mv(d, {2, 3}), z), mv(d, {2}, -1.0), "(e2^e3) v (e1^e2) = -e2");
        g.same(ops.vee(two_fermion_x(ops, d), z), mv(d, {1}, -kAlpha * kDelta) + mv(d, {2}, -kBeta * kDelta),
               "X v Z = -ad e1 - bd e2");
        out.push_back(g.done());
    }
    {
        Group g("Example: joins in d = 4", tol);
        Dim d(4);
        g.same(ops.vee(mv(d, {1, 2}), mv(d, {3})), Multivector(d), "(e1^e2) v e3 = 0");
        g.same(ops.vee(ops.vee(mv(d, {1, 2}), mv(d, {3})), mv(d, {4})), Multivector(d),
               "((e1^e2) v e3) v e4 = 0");
        g.same(ops.vee(mv(d, {1, 2}), mv(d, {3, 4})), Multivector::vacuum(d), "(e1^e2) v (e3^e4) = 1");
        g.same(ops.vee(mv(d, {1, 2}), ops.wedge(mv(d, {3, 4}), mv(d, {1}))), mv(d, {1}),
               "(e1^e2) v (e3^e4^e1) = e1");
        out.push_back(g.done());
    }
    {
        Group g("Example: orthonormal basis under the scalar product", tol);
        auto product = [&](const Multivector& a, const Multivector& b) {
            return ops.vee(conjugate(a), ops.hodge(b)).coeff(Blade{0});
        };
        for (int dv = 2; dv <= 3; ++dv) {
            Dim d(dv);
            for (Blade a : canonical_blades(d)) {
                for (Blade b : canonical_blades(d)) {
                    if (a.step() != b.step()) {
                        continue;
                    }
                    Coeff want = a == b ? 1.0 : 0.0;
                    Coeff got = product(blade(d, a), blade(d, b));
                    g.check(std::abs(got - want) <= tol, "(" + name(a, d) + ", " + name(b, d) + ") = " +
                                                             format_coeff(want) + ", got " + format_coeff(got) +
                                                             " (d=" + std::to_string(dv) + ")");
                }
            }
        }
        out.push_back(g.done());
    }
    {
        Group g("Example: qubit basis map", tol);
        g.same(n_map(QubitBasisState::parse("|1,0,1,0>")), mv(Dim(4), {1, 3}), "|1,0,1,0> -> e1^e3");
        g.same(n_map(QubitBasisState::parse("|0,0>")), Multivector::vacuum(Dim(2)), "|0,0> -> 1");
        g.same(n_map(QubitBasisState::parse("|1,1>")), Multivector::top(Dim(2)), "|1,1> -> E");
        Dim d(2);
        QubitState s = QubitState::from_terms(d, {{QubitBasisState::parse("00"), kAlpha},
                                                  {QubitBasisState::parse("10"), kBeta},
                                                  {QubitBasisState::parse("01"), kGamma},
                                                  {QubitBasisState::parse("11"), kDelta}});
        Multivector want = Multivector::scalar(d, kAlpha) + mv(d, {1}, kBeta) + mv(d, {2}, kGamma) +
                           kDelta * Multivector::top(d);
        g.same(n_map(s), want, "a|00> + b|10> + c|01> + d|11> -> a + b e1 + c e2 + d E");
        g.check(n_inverse(Multivector(d)).is_zero(), "zero multivector -> zero state");
        out.push_back(g.done());
    }
    {
        Group g("Example: creation strings on the vacuum in d = 4", tol);
        Dim d(4);
        Multivector vac = Multivector::vacuum(d);
        g.same(apply_creation(1, apply_creation(4, vac)), mv(d, {1, 4}), "a1+ a4+ 1 = e1^e4");
        g.same(multi_create(Blade::from_indices(d, std::array{1, 4}), vac), mv(d, {1, 4}), "A(1,4)+ 1 = e1^e4");
        out.push_back(g.done());
    }
    return out;
}

}  // namespace

VerifyReport verify_reference(const AlgebraOps& ops, double tol) {
    VerifyReport r;
    r.groups.push_back(relation_table(ops, tol));
    r.groups.push_back(two_mode_table(ops, tol));
    r.groups.push_back(subset_table(ops, tol));
    r.groups.push_back(qubit_table(ops, tol));
    for (auto& g : worked_examples(ops, tol)) {
        r.groups.push_back(std::move(g));
    }
    return r;
}

}  // namespace excalc
