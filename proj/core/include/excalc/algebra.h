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

#include <optional>

#include "excalc/multivector.h"

namespace excalc {

/// Exterior product (meet). Bilinear; overlapping blades vanish.
/// Throws DimensionMismatch.
Multivector wedge(const Multivector& a, const Multivector& b);

/// Hodge star complement: maps step k onto step d-k, exchanging fermions and
/// holes blade by blade.
Multivector hodge(const Multivector& a);

/// The inverse of hodge: hodge(hodge_inverse(x)) == x. On step m it equals
/// (-1)^(m(d-m)) hodge.
Multivector hodge_inverse(const Multivector& a);

/// Regressive product (join), computed by duality:
///   a v b = hodge_inverse(hodge(a) ^ hodge(b)).
/// Vanishes when step(a) + step(b) < d. Throws DimensionMismatch.
Multivector vee(const Multivector& a, const Multivector& b);

/// Coefficient-wise complex conjugation.
Multivector conjugate(const Multivector& a);

/// (a, b) = conj(a) v hodge(b), defined only when a and b share a single step.
/// A zero operand counts as belonging to every step. Throws GradeError for
/// mixed-grade or mismatched-step operands and DimensionMismatch.
Coeff scalar_product(const Multivector& a, const Multivector& b);

/// One-hole state hodge(e_i) = (-1)^(i-1) e_1^...^(no e_i)^...^e_d.
/// Throws std::out_of_range for i outside 1..d.
Multivector covector(Dim dim, int index);

/// Keeps only the blades of the given step.
Multivector grade_project(const Multivector& a, int step);

/// The common step of all blades; nullopt for mixed grades and for zero.
std::optional<int> step_of(const Multivector& a);

enum class Parity { even, odd, mixed };

/// Fermion-number parity sector. The zero multivector reports even.
Parity parity_sector(const Multivector& a);

const char* to_string(Parity p);

}  // namespace excalc
