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

#include <algorithm>

#include "criteria.h"
#include "excalc/algebra.h"
#include "excalc/extensor.h"
#include "oracles.h"
#include "random.h"

namespace excalc::acceptance {

namespace {

using testing::Rng;

double max_coeff(const Multivector& a) {
    double m = 0;
    for (const auto& [blade, c] : a.terms()) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

std::string shape(Dim d, size_t p, size_t q, size_t shared) {
    return "d=" + std::to_string(d.value()) + " |U|=" + std::to_string(p) + " |W|=" + std::to_string(q) +
           " shared=" + std::to_string(shared);
}

}  // namespace

Outcome join_equivalence() {
    Tally t;
    Rng rng(600);
    constexpr double kTol = 1e-9;
    for (int trial = 0; trial < 600; ++trial) {
        Dim d = rng.dim(2, 6);
        int n = d.value();
        int ka = rng.uniform_int(0, n);
        int kb = rng.coin(0.85) ? rng.uniform_int(n - ka, n) : rng.uniform_int(0, n);
        ExtensorFactors a = rng.factors(d, ka);
        ExtensorFactors b = rng.factors(d, kb);
        Multivector dual = vee(expand(a), expand(b));
        std::string where = "d=" + std::to_string(n) + " steps " + std::to_string(ka) + "," + std::to_string(kb);
        t.check(max_abs_difference(join_by_splits(a, b, JoinVariant::split_first), dual) <= kTol,
                where + " split over A");
        t.check(max_abs_difference(join_by_splits(a, b, JoinVariant::split_second), dual) <= kTol,
                where + " split over B");
    }
    return t.outcome("checks over 600 extensor pairs");
}

Outcome subspace_oracle() {
    Tally t;
    Rng rng(700);
    constexpr double kTol = 1e-9;
    int covering_with_overlap = 0;
    for (int trial = 0; trial < 600; ++trial) {
        Dim d = rng.dim(2, 6);
        int n = d.value();
        int p = rng.uniform_int(1, n);
        int q = rng.uniform_int(1, n);
        int shared = rng.uniform_int(0, std::min(p, q));
        std::vector<VectorC> common = rng.vectors(d, shared);
        std::vector<VectorC> u = common;
        std::vector<VectorC> w = common;
        for (const VectorC& v : rng.vectors(d, p - shared)) {
            u.push_back(v);
        }
        for (const VectorC& v : rng.vectors(d, q - shared)) {
            w.push_back(v);
        }
        std::shuffle(w.begin(), w.end(), rng.engine());
        std::string where = shape(d, u.size(), w.size(), common.size());

        std::vector<VectorC> both = u;
        both.insert(both.end(), w.begin(), w.end());
        size_t oracle_meet_dim = testing::oracle_rank(u) + testing::oracle_rank(w) - testing::oracle_rank(both);
        size_t meet_dim = intersection_dim(u, w);
        t.check(meet_dim == oracle_meet_dim, where + " intersection dimension " + std::to_string(meet_dim) +
                                                 " vs oracle " + std::to_string(oracle_meet_dim));

        Multivector a = expand(ExtensorFactors(d, u));
        Multivector b = expand(ExtensorFactors(d, w));
        Multivector meet = wedge(a, b);
        Multivector join = vee(a, b);
        bool covers = testing::oracle_rank(both) == static_cast<size_t>(n);
        t.check((max_coeff(meet) <= kTol) == (oracle_meet_dim > 0), where + " wedge vanishing");
        t.check((max_coeff(join) > kTol) == covers, where + " vee nonvanishing");
        t.check(span_covers(u, w) == covers, where + " span_covers");

        if (covers && oracle_meet_dim > 0) {
            ++covering_with_overlap;
            double scale = max_coeff(join);
            std::vector<VectorC> inside = intersection_basis(u, w);
            t.check(inside.size() == oracle_meet_dim, where + " intersection basis size");
            inside.insert(inside.end(), common.begin(), common.end());
            for (const VectorC& v : inside) {
                t.check(max_coeff(wedge(testing::as_multivector(v), join)) <= kTol * std::max(1.0, scale),
                        where + " intersection vector does not annihilate the join");
            }
        }
    }
    Outcome out = t.outcome("checks over 600 subspace pairs");
    out.notes.push_back(std::to_string(covering_with_overlap) + " pairs both cover V and overlap");
    if (covering_with_overlap < 50) {
        out.pass = false;
        out.notes.push_back("too few overlapping covering pairs were sampled");
    }
    return out;
}

}  // namespace excalc::acceptance
