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

// Boolean set gates on the powerset of {1..d} next to the partial operations
// induced on it by wedge and vee through the map subset -> basis blade.

#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "excalc/multivector.h"

namespace excalc {

/// A subset of {1..d}; bit i-1 of `members` marks element i.
struct SubsetState {
    Dim dim;
    uint32_t members = 0;

    /// Throws std::out_of_range for elements outside 1..d.
    static SubsetState of(Dim dim, std::initializer_list<int> elements);
    static SubsetState empty(Dim dim) { return SubsetState{dim, 0}; }
    static SubsetState full(Dim dim) { return SubsetState{dim, dim.full_mask()}; }

    /// "{}", "{1}", "{1,2}".
    std::string to_string() const;

    friend bool operator==(const SubsetState&, const SubsetState&) = default;
};

/// Defined subset, or nullopt when the operation falls outside its domain.
using PartialResult = std::optional<SubsetState>;
using SubsetPair = std::pair<SubsetState, SubsetState>;

/// Subset {i1 < ... < ik} -> e_{i1}^...^e_{ik}; the empty set maps to 1.
Multivector m_map(const SubsetState& s);

/// Defined iff `a` is a single blade whose coefficient is within tol of +1.
/// Zero and negatively signed blades are undefined.
PartialResult m_inverse(const Multivector& a, double tol = kPruneTolerance);

/// m_inverse(m_map(a) ^ m_map(b)). Throws DimensionMismatch.
PartialResult pseudo_wedge(const SubsetState& a, const SubsetState& b);
/// m_inverse(m_map(a) v m_map(b)). Throws DimensionMismatch.
PartialResult pseudo_vee(const SubsetState& a, const SubsetState& b);

inline constexpr int kMaxDomainDim = 8;

/// All pairs on which pseudo_wedge is defined, second element in the outer
/// loop. Throws std::invalid_argument for d above kMaxDomainDim.
std::vector<SubsetPair> domain_d1(Dim dim);
/// All pairs on which pseudo_vee is defined.
std::vector<SubsetPair> domain_d2(Dim dim);

SubsetState bool_or(const SubsetState& a, const SubsetState& b);
SubsetState bool_and(const SubsetState& a, const SubsetState& b);
SubsetState bool_not(const SubsetState& a);

/// Every subset of {1..d} in canonical order (by size, then lexicographic).
std::vector<SubsetState> all_subsets(Dim dim);

}  // namespace excalc
