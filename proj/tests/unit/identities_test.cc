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

// The relation table identities as standalone assertions, plus the three
// statements that only hold in a corrected form. For those the corrected
// form is asserted over random inputs and the literal form is pinned by an
// explicit counterexample.

#include <gtest/gtest.h>

#include "excalc/algebra.h"
#include "excalc/extensor.h"
#include "random.h"

namespace excalc {
namespace {

using testing::Rng;

Multivector b(Dim d, std::initializer_list<int> idx) { return Multivector::from_indices(d, idx); }

Multivector random_blade(Rng& rng, Dim d, int min_step, int max_step) {
    return Multivector::blade(d, rng.blade_of_step(d, rng.uniform_int(min_step, max_step)));
}

TEST(RelationTable, TopAndVacuumRules) {
    Rng rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        Dim d = rng.dim(2, 8);
        int n = d.value();
        Multivector one = Multivector::vacuum(d);
        Multivector top = Multivector::top(d);
        Multivector a = rng.homogeneous(d, rng.uniform_int(1, n));
        Multivector low = rng.homogeneous(d, rng.uniform_int(0, n - 1));
        ASSERT_TRUE(wedge(a, top).is_zero());
        ASSERT_TRUE(equal_approx(wedge(a, one), a, 1e-12));
        ASSERT_TRUE(equal_approx(vee(a, top), a, 1e-12));
        ASSERT_TRUE(equal_approx(vee(low, top), low, 1e-12));
        ASSERT_TRUE(vee(low, one).is_zero());
    }
}

TEST(RelationTable, ExtremeBladesWithThemselves) {
    for (int n = 1; n <= 8; ++n) {
        Dim d(n);
        Multivector one = Multivector::vacuum(d);
        Multivector top = Multivector::top(d);
        EXPECT_TRUE(equal_approx(wedge(one, one), one));
        EXPECT_TRUE(vee(one, one).is_zero());
        EXPECT_TRUE(wedge(top, top).is_zero());
        EXPECT_TRUE(equal_approx(vee(top, top), top));
    }
}

TEST(RelationTable, BladesAnnihilateThemselves) {
    Rng rng(32);
    for (int trial = 0; trial < 1000; ++trial) {
        Dim d = rng.dim(2, 8);
        Multivector a = random_blade(rng, d, 1, d.value());
        Multivector c = random_blade(rng, d, 0, d.value() - 1);
        ASSERT_TRUE(wedge(a, a).is_zero());
        ASSERT_TRUE(vee(c, c).is_zero());
    }
}

TEST(RelationTable, OrderedBasisWedgeIsTop) {
    for (int n = 1; n <= 8; ++n) {
        Dim d(n);
        Multivector acc = Multivector::vacuum(d);
        for (int i = 1; i <= n; ++i) {
            acc = wedge(acc, Multivector::basis_vector(d, i));
        }
        EXPECT_TRUE(equal_approx(acc, Multivector::top(d)));
    }
}

// The join of the trailing d-k one-hole states reproduces the leading k
// fermions up to the sign (-1)^(k(d-k)).
Multivector covector_chain(Dim d, int k) {
    Multivector acc = covector(d, k + 1);
    for (int j = k + 2; j <= d.value(); ++j) {
        acc = vee(acc, covector(d, j));
    }
    return acc;
}

TEST(CovectorJoin, EqualsLeadingFermionsUpToParitySign) {
    for (int n = 2; n <= 8; ++n) {
        Dim d(n);
        for (int k = 1; k < n; ++k) {
            std::vector<int> lead(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) {
                lead[static_cast<size_t>(i)] = i + 1;
            }
            Multivector want = Multivector::from_indices(d, lead);
            double sign = (k * (n - k)) % 2 == 0 ? 1.0 : -1.0;
            EXPECT_TRUE(equal_approx(covector_chain(d, k), sign * want)) << "d=" << n << " k=" << k;
        }
    }
}

TEST(CovectorJoin, UnsignedFormFailsWhenParityIsOdd) {
    Dim d(2);
    EXPECT_TRUE(equal_approx(covector_chain(d, 1), -b(d, {1})));
    EXPECT_FALSE(equal_approx(covector_chain(d, 1), b(d, {1})));
    Dim d4(4);
    EXPECT_FALSE(equal_approx(covector_chain(d4, 1), b(d4, {1})));
    EXPECT_TRUE(equal_approx(covector_chain(d4, 2), b(d4, {1, 2})));
}

TEST(TripleDeterminant, BasisCases) {
    Dim d(3);
    auto f = [&](int i) { return ExtensorFactors(d, {VectorC::basis(d, i)}); };
    TripleDet t = triple_det(f(1), f(2), f(3));
    EXPECT_NEAR(std::abs(t.join_of_meet - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(t.meet_then_join - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(t.determinant - 1.0), 0.0, 1e-12);
    TripleDet swapped = triple_det(f(2), f(1), f(3));
    EXPECT_NEAR(std::abs(swapped.join_of_meet + 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(swapped.meet_then_join + 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(swapped.determinant + 1.0), 0.0, 1e-12);
}

TEST(TripleDeterminant, JoinAndMeetOrdersAgreeWithDeterminant) {
    Rng rng(33);
    for (int trial = 0; trial < 500; ++trial) {
        Dim d = rng.dim(2, 7);
        int n = d.value();
        int ka = rng.uniform_int(0, n);
        int kb = rng.uniform_int(0, n - ka);
        TripleDet t = triple_det(rng.factors(d, ka), rng.factors(d, kb), rng.factors(d, n - ka - kb));
        ASSERT_NEAR(std::abs(t.join_of_meet - t.determinant), 0.0, 1e-9);
        ASSERT_NEAR(std::abs(t.meet_then_join - t.determinant), 0.0, 1e-9);
    }
}

TEST(TripleDeterminant, WedgeOfJoinVanishesOnceTheFirstFactorHasStep) {
    Rng rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        Dim d = rng.dim(2, 7);
        int n = d.value();
        int ka = rng.uniform_int(1, n);
        int kb = rng.uniform_int(0, n - ka);
        TripleDet t = triple_det(rng.factors(d, ka), rng.factors(d, kb), rng.factors(d, n - ka - kb));
        ASSERT_EQ(t.literal_wedge_of_join, Coeff(0));
    }
    Dim d(3);
    auto f = [&](int i) { return ExtensorFactors(d, {VectorC::basis(d, i)}); };
    TripleDet t = triple_det(f(1), f(2), f(3));
    EXPECT_NE(t.literal_wedge_of_join, t.determinant);
    EXPECT_THROW(triple_det(f(1), f(2), ExtensorFactors(d)), std::invalid_argument);
}

TEST(TripleDeterminant, WedgeOfJoinIsTheDeterminantOnlyAsAScalar) {
    Rng rng(35);
    for (int trial = 0; trial < 100; ++trial) {
        Dim d = rng.dim(2, 6);
        int kb = rng.uniform_int(0, d.value());
        ExtensorFactors y = rng.factors(d, kb);
        ExtensorFactors z = rng.factors(d, d.value() - kb);
        TripleDet t = triple_det(ExtensorFactors(d), y, z);
        Multivector literal = wedge(Multivector::vacuum(d), vee(expand(y), expand(z)));
        ASSERT_TRUE(equal_approx(literal, Multivector::scalar(d, t.determinant), 1e-9));
        ASSERT_EQ(t.literal_wedge_of_join, Coeff(0));
    }
}

TEST(PauliCorollary, JoinAndMeetOnComplementaryBladesAreBothNonzero) {
    Dim d(2);
    EXPECT_FALSE(vee(b(d, {1}), b(d, {2})).is_zero());
    EXPECT_FALSE(wedge(b(d, {1}), b(d, {2})).is_zero());
}

TEST(PauliCorollary, NonzeroJoinForcesZeroMeetUnlessComplementary) {
    Rng rng(36);
    int nonzero_joins = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        Dim d = rng.dim(2, 8);
        Blade s = rng.blade(d);
        Blade t = rng.blade(d);
        Multivector x = Multivector::blade(d, s);
        Multivector y = Multivector::blade(d, t);
        if (vee(x, y).is_zero()) {
            continue;
        }
        ++nonzero_joins;
        bool complementary = (s.mask ^ t.mask) == d.full_mask() && (s.mask & t.mask) == 0;
        ASSERT_EQ(wedge(x, y).is_zero(), !complementary);
        if (s.step() + t.step() > d.value()) {
            ASSERT_TRUE(wedge(x, y).is_zero());
        }
    }
    EXPECT_GT(nonzero_joins, 100);
}

}  // namespace
}  // namespace excalc
