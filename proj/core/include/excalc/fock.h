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

#pragma once

#include <string>
#include <string_view>

#include "excalc/matrix.h"
#include "excalc/multivector.h"

namespace excalc {

enum class LadderAction { create, annihilate };

/// a_i^dagger (create) or a_i (annihilate) for a 1-based mode index.
struct LadderOp {
    LadderAction action;
    int index;

    /// Parses "create:i" or "annihilate:i". Throws std::invalid_argument.
    static LadderOp parse(std::string_view text);
    std::string to_string() const;
};

/// a_i^dagger A = e_i ^ A. Throws std::out_of_range for i outside 1..d.
Multivector apply_creation(int index, const Multivector& a);

/// a_i A: the interior product. A blade S containing i maps to
/// (-1)^|{j in S : j < i}| e_{S \ {i}}; blades without i vanish.
Multivector apply_annihilation(int index, const Multivector& a);

Multivector apply(LadderOp op, const Multivector& a);

/// The operator string a_{i1}^dagger ... a_{ik}^dagger with i1 < ... < ik,
/// applied right to left. Throws std::out_of_range if modes exceed d.
Multivector multi_create(Blade modes, const Multivector& a);

/// a_{i1} ... a_{ik}, applied right to left.
Multivector multi_annihilate(Blade modes, const Multivector& a);

inline constexpr int kMaxOperatorMatrixDim = 8;

/// Matrix of the operator in the canonical blade basis (step, then lex);
/// column j holds the image of basis blade j. Throws std::invalid_argument
/// for d above kMaxOperatorMatrixDim.
ComplexMatrix operator_matrix(LadderOp op, Dim dim);

}  // namespace excalc
