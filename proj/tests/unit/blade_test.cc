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

#include "excalc/blade.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "oracles.h"

namespace excalc {
namespace {

TEST(Dim, AcceptsOneThroughSixteen) {
    EXPECT_EQ(Dim(1).value(), 1);
    EXPECT_EQ(Dim(16).blade_count(), 65536u);
    EXPECT_THROW(Dim(0), std::invalid_argument);
    EXPECT_THROW(Dim(17), std::invalid_argument);
}

TEST(Blade, FromIndicesSortsAndValidates) {
    Dim d(4);
    EXPECT_EQ(Blade::from_indices(d, std::array{3, 1}).mask, 0b101u);
    EXPECT_EQ(Blade::from_indices(d, std::array<int, 0>{}).mask, 0u);
    EXPECT_EQ(Blade::from_indices(Dim(2), std::array{1, 2}), Blade::full(Dim(2)));
    EXPECT_THROW(Blade::from_indices(d, std::array{5}), std::out_of_range);
    EXPECT_THROW(Blade::from_indices(d, std::array{0}), std::out_of_range);
    EXPECT_THROW(Blade::from_indices(d, std::array{2, 2}), std::invalid_argument);
}

TEST(Blade, IndicesAndStep) {
    Blade b{0b1011};
    EXPECT_EQ(b.indices(), (std::vector<int>{1, 2, 4}));
    EXPECT_EQ(b.step(), 3);
    EXPECT_TRUE(b.contains(4));
    EXPECT_FALSE(b.contains(3));
    EXPECT_FALSE(b.fits(Dim(3)));
    EXPECT_TRUE(b.fits(Dim(4)));
}

TEST(CanonicalOrder, StepThenLexicographic) {
    std::vector<std::vector<int>> want = {{},     {1},    {2},    {3},       {1, 2},
                                          {1, 3}, {2, 3}, {1, 2, 3}};
    std::vector<Blade> got = canonical_blades(Dim(3));
    ASSERT_EQ(got.size(), want.size());
    for (size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].indices(), want[i]) << "position " << i;
    }
}

TEST(CanonicalOrder, MatchesIndexListComparisonForAllPairs) {
    Dim d(5);
    for (Blade a : canonical_blades(d)) {
        for (Blade b : canonical_blades(d)) {
            auto ia = a.indices();
            auto ib = b.indices();
            bool want = ia.size() != ib.size() ? ia.size() < ib.size() : ia < ib;
            EXPECT_EQ(CanonicalOrder{}(a, b), want);
        }
    }
}

TEST(WedgeSign, AgreesWithPermutationOracle) {
    Dim d(6);
    for (Blade s : canonical_blades(d)) {
        for (Blade t : canonical_blades(d)) {
            auto seq = s.indices();
            auto ti = t.indices();
            seq.insert(seq.end(), ti.begin(), ti.end());
            EXPECT_EQ(wedge_sign(s, t), testing::permutation_sign(seq));
        }
    }
}

TEST(HodgeSign, AgreesWithComplementPermutation) {
    for (int dv = 1; dv <= 7; ++dv) {
        Dim d(dv);
        for (Blade s : canonical_blades(d)) {
            Blade rest{d.full_mask() & ~s.mask};
            EXPECT_EQ(hodge_sign(s), wedge_sign(s, rest)) << "d=" << dv << " mask=" << s.mask;
        }
    }
}

}  // namespace
}  // namespace excalc
