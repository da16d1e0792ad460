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

#include "excalc/boolean_bridge.h"

#include <cmath>
#include <stdexcept>

#include "excalc/algebra.h"
#include "excalc/errors.h"

namespace excalc {

SubsetState SubsetState::of(Dim dim, std::initializer_list<int> elements) {
    SubsetState s{dim, 0};
    for (int e : elements) {
        if (e < 1 || e > dim.value()) {
            throw std::out_of_range("element " + std::to_string(e) + " outside 1.." + std::to_string(dim.value()));
        }
        s.members |= uint32_t{1} << (e - 1);
    }
    return s;
}

std::string SubsetState::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i : Blade{members}.indices()) {
        if (!first) {
            out += ",";
        }
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

Multivector m_map(const SubsetState& s) { return Multivector::blade(s.dim, Blade{s.members}); }

PartialResult m_inverse(const Multivector& a, double tol) {
    if (a.size() != 1) {
        return std::nullopt;
    }
    const auto& [blade, c] = *a.terms().begin();
    if (std::abs(c - Coeff{1.0}) > tol) {
        return std::nullopt;
    }
    return SubsetState{a.dim(), blade.mask};
}

namespace {

void require_same_dim(const SubsetState& a, const SubsetState& b) {
    if (a.dim != b.dim) {
        throw DimensionMismatch("subsets of different ground sets");
    }
}

template <typename Partial>
std::vector<SubsetPair> domain_of(Dim dim, Partial partial) {
    if (dim.value() > kMaxDomainDim) {
        throw std::invalid_argument("domain enumeration is limited to d <= " + std::to_string(kMaxDomainDim));
    }
    std::vector<SubsetState> subsets = all_subsets(dim);
    std::vector<SubsetPair> out;
    for (const auto& second : subsets) {
        for (const auto& first : subsets) {
            if (partial(first, second)) {
                out.emplace_back(first, second);
            }
        }
    }
    return out;
}

}  // namespace

PartialResult pseudo_wedge(const SubsetState& a, const SubsetState& b) {
    require_same_dim(a, b);
    return m_inverse(wedge(m_map(a), m_map(b)));
}

PartialResult pseudo_vee(const SubsetState& a, const SubsetState& b) {
    require_same_dim(a, b);
    return m_inverse(vee(m_map(a), m_map(b)));
}

std::vector<SubsetPair> domain_d1(Dim dim) { return domain_of(dim, pseudo_wedge); }

std::vector<SubsetPair> domain_d2(Dim dim) { return domain_of(dim, pseudo_vee); }

SubsetState bool_or(const SubsetState& a, const SubsetState& b) {
    require_same_dim(a, b);
    return SubsetState{a.dim, a.members | b.members};
}

SubsetState bool_and(const SubsetState& a, const SubsetState& b) {
    require_same_dim(a, b);
    return SubsetState{a.dim, a.members & b.members};
}

SubsetState bool_not(const SubsetState& a) { return SubsetState{a.dim, a.dim.full_mask() & ~a.members}; }

std::vector<SubsetState> all_subsets(Dim dim) {
    std::vector<SubsetState> out;
    for (Blade b : canonical_blades(dim)) {
        out.push_back(SubsetState{dim, b.mask});
    }
    return out;
}

}  // namespace excalc
