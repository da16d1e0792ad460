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

// Self-check against the published reference tables and worked examples.
// The algebra is injected so a deliberately broken implementation can be
// shown to fail.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "excalc/multivector.h"

namespace excalc {

struct AlgebraOps {
    std::function<Multivector(const Multivector&, const Multivector&)> wedge;
    std::function<Multivector(const Multivector&)> hodge;
    std::function<Multivector(const Multivector&)> hodge_inverse;

    static AlgebraOps standard();

    /// Join by duality from the supplied star and wedge.
    Multivector vee(const Multivector& a, const Multivector& b) const;
};

struct CheckGroup {
    std::string name;
    int total = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

struct VerifyReport {
    std::vector<CheckGroup> groups;

    bool all_passed() const;
    /// One PASS/FAIL line per group, failures indented below.
    std::string to_text() const;
};

/// Runs the four reference tables and the worked examples.
VerifyReport verify_reference(const AlgebraOps& ops = AlgebraOps::standard(), double tol = kPruneTolerance);

}  // namespace excalc
