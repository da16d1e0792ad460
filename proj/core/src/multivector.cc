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

#include "excalc/multivector.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "excalc/errors.h"

namespace excalc {

Multivector Multivector::scalar(Dim dim, Coeff value) { return blade(dim, Blade{}, value); }

Multivector Multivector::blade(Dim dim, Blade b, Coeff value) {
    TermAccumulator acc(dim);
    acc.add(b, value);
    return acc.finish();
}

Multivector Multivector::from_indices(Dim dim, std::span<const int> indices) {
    return blade(dim, Blade::from_indices(dim, indices));
}

Coeff Multivector::coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Coeff{} : it->second;
}

TermAccumulator::TermAccumulator(Dim dim) : dim_(dim), dense_(dim.blade_count()) {}

void TermAccumulator::add(Blade b, Coeff value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw std::domain_error("non-finite coefficient");
    }
    if (!b.fits(dim_)) {
        throw std::out_of_range("blade outside dimension " + std::to_string(dim_.value()));
    }
    dense_[b.mask] += value;
}

Multivector TermAccumulator::finish() const {
    Multivector::Terms terms;
    for (uint32_t m = 0; m < dense_.size(); ++m) {
        const Coeff& c = dense_[m];
        if (std::abs(c) > kPruneTolerance) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
                throw std::domain_error("coefficient overflowed to a non-finite value");
            }
            terms.emplace_hint(terms.end(), Blade{m}, c);
        }
    }
    return Multivector(dim_, std::move(terms));
}

void require_same_dim(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a.dim().value()) + " vs " +
                                std::to_string(b.dim().value()));
    }
}

Multivector operator+(const Multivector& a, const Multivector& b) {
    require_same_dim(a, b);
    TermAccumulator acc(a.dim());
    for (const auto& [blade, c] : a.terms()) {
        acc.add(blade, c);
    }
    for (const auto& [blade, c] : b.terms()) {
        acc.add(blade, c);
    }
    return acc.finish();
}

Multivector operator-(const Multivector& a, const Multivector& b) { return a + (-b); }

Multivector operator-(const Multivector& a) { return Coeff{-1.0} * a; }

Multivector operator*(Coeff c, const Multivector& a) {
    TermAccumulator acc(a.dim());
    for (const auto& [blade, v] : a.terms()) {
        acc.add(blade, c * v);
    }
    return acc.finish();
}

double max_abs_difference(const Multivector& a, const Multivector& b) {
    require_same_dim(a, b);
    double worst = 0.0;
    for (const auto& [blade, c] : a.terms()) {
        worst = std::max(worst, std::abs(c - b.coeff(blade)));
    }
    for (const auto& [blade, c] : b.terms()) {
        if (a.terms().find(blade) == a.terms().end()) {
            worst = std::max(worst, std::abs(c));
        }
    }
    return worst;
}

bool equal_approx(const Multivector& a, const Multivector& b, double tol) {
    if (a.dim() != b.dim()) {
        return false;
    }
    return max_abs_difference(a, b) <= tol;
}

}  // namespace excalc
