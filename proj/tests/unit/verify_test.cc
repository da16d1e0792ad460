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

#include <gtest/gtest.h>

#include "excalc/algebra.h"

namespace excalc {
namespace {

const CheckGroup* find_group(const VerifyReport& r, std::string_view prefix) {
    for (const CheckGroup& g : r.groups) {
        if (g.name.starts_with(prefix)) {
            return &g;
        }
    }
    return nullptr;
}

TEST(VerifyReference, StandardAlgebraPassesEveryGroup) {
    VerifyReport r = verify_reference();
    EXPECT_TRUE(r.all_passed()) << r.to_text();
    EXPECT_EQ(r.groups.size(), 13u);
    for (std::string_view table : {"Table I ", "Table II ", "Table III ", "Table IV "}) {
        EXPECT_NE(find_group(r, table), nullptr) << table;
    }
    int examples = 0;
    for (const CheckGroup& g : r.groups) {
        examples += g.name.starts_with("Example:");
        EXPECT_GT(g.total, 0) << g.name;
    }
    EXPECT_GE(examples, 6);
    std::string text = r.to_text();
    EXPECT_NE(text.find("PASS  Table II wedge and vee (d = 2) (48/48)"), std::string::npos);
    EXPECT_TRUE(text.ends_with("13/13 groups passed\n"));
}

TEST(VerifyReference, FlippedStarBreaksTheJoinTable) {
    AlgebraOps ops = AlgebraOps::standard();
    ops.hodge = [](const Multivector& a) { return -hodge(a); };
    ops.hodge_inverse = [](const Multivector& a) { return -hodge_inverse(a); };
    VerifyReport r = verify_reference(ops);
    EXPECT_FALSE(r.all_passed());
    const CheckGroup* table2 = find_group(r, "Table II ");
    ASSERT_NE(table2, nullptr);
    EXPECT_FALSE(table2->passed());
    bool vee_failure = false;
    for (const std::string& f : table2->failures) {
        vee_failure = vee_failure || f.starts_with("AvB ");
    }
    EXPECT_TRUE(vee_failure) << r.to_text();
    EXPECT_NE(r.to_text().find("FAIL  Table II"), std::string::npos);
}

TEST(VerifyReference, FlippedWedgeBreaksTheMeetTable) {
    AlgebraOps ops = AlgebraOps::standard();
    ops.wedge = [](const Multivector& a, const Multivector& b) { return wedge(b, a); };
    VerifyReport r = verify_reference(ops);
    EXPECT_FALSE(find_group(r, "Table II ")->passed());
    EXPECT_FALSE(find_group(r, "Table IV ")->passed());
}

TEST(AlgebraOps, DerivedJoinMatchesLibrary) {
    AlgebraOps ops = AlgebraOps::standard();
    Dim d(4);
    Multivector a = Multivector::from_indices(d, {1, 2});
    Multivector b = Multivector::from_indices(d, {3, 4, 1});
    EXPECT_TRUE(equal_approx(ops.vee(a, b), vee(a, b)));
}

}  // namespace
}  // namespace excalc
