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

#include "excalc/algebra.h"

#include <stdexcept>
#include <string>

#include "excalc/errors.h"

namespace excalc {

Multivector wedge(const Multivector& a, const Multivector& b) {
    require_same_dim(a, b);
    TermAccumulator acc(a.dim());
    for (const auto& [sa, ca] : a.terms()) {
        for (const auto& [sb, cb] : b.terms()) {
            int sign = wedge_sign(sa, sb);
            if (sign != 0) {
                acc.add(Blade{sa.mask | sb.mask}, static_cast<double>(sign) * ca * cb);
            }
        }
    }
    return acc.finish();
}

Multivector hodge(const Multivector& a) {
    uint32_t full = a.dim().full_mask();
    TermAccumulator acc(a.dim());
    for (const auto& [blade, c] : a.terms()) {
        acc.add(Blade{full ^ blade.mask}, static_cast<double>(hodge_sign(blade)) * c);
    }
    return acc.finish();
}

Multivector hodge_inverse(const Multivector& a) {
    int d = a.dim().value();
    uint32_t full = a.dim().full_mask();
    TermAccumulator acc(a.dim());
    for (const auto& [blade, c] : a.terms()) {
        int m = blade.step();
        int sign = hodge_sign(blade) * (((m * (d - m)) & 1) ? -1 : 1);
        acc.add(Blade{full ^ blade.mask}, static_cast<double>(sign) * c);
    }
    return acc.finish();
}

Multivector vee(const Multivector& a, const Multivector& b) {
    require_same_dim(a, b);
    return hodge_inverse(wedge(hodge(a), hodge(b)));
}

Multivector conjugate(const Multivector& a) {
    TermAccumulator acc(a.dim());
    for (const auto& [blade, c] : a.terms()) {
        acc.add(blade, std::conj(c));
    }
    return acc.finish();
}

Coeff scalar_product(const Multivector& a, const Multivector& b) {
    require_same_dim(a, b);
    auto ka = step_of(a);
    auto kb = step_of(b);
    if (!a.is_zero() && !ka) {
        throw GradeError("scalar product: left operand mixes several steps");
    }
    if (!b.is_zero() && !kb) {
        throw GradeError("scalar product: right operand mixes several steps");
    }
    if (ka && kb && *ka != *kb) {
        throw GradeError("scalar product is undefined between step " + std::to_string(*ka) + " and step " +
                         std::to_string(*kb));
    }
    if (a.is_zero() || b.is_zero()) {
        return Coeff{};
    }
    return vee(conjugate(a), hodge(b)).coeff(Blade{});
}

Multivector covector(Dim dim, int index) { return hodge(Multivector::basis_vector(dim, index)); }

Multivector grade_project(const Multivector& a, int step) {
    TermAccumulator acc(a.dim());
    for (const auto& [blade, c] : a.terms()) {
        if (blade.step() == step) {
            acc.add(blade, c);
        }
    }
    return acc.finish();
}

std::optional<int> step_of(const Multivector& a) {
    if (a.is_zero()) {
        return std::nullopt;
    }
    // Terms are ordered by step, so first and last bound the range.
    int lo = a.terms().begin()->first.step();
    int hi = a.terms().rbegin()->first.step();
    if (lo != hi) {
        return std::nullopt;
    }
    return lo;
}

Parity parity_sector(const Multivector& a) {
    bool even = false;
    bool odd = false;
    for (const auto& [blade, c] : a.terms()) {
        (blade.step() % 2 == 0 ? even : odd) = true;
    }
    if (even && odd) {
        return Parity::mixed;
    }
    return odd ? Parity::odd : Parity::even;
}

const char* to_string(Parity p) {
    switch (p) {
        case Parity::even:
            return "even";
        case Parity::odd:
            return "odd";
        case Parity::mixed:
            return "mixed";
    }
    return "?";
}

}  // namespace excalc
