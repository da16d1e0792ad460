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

#include "excalc/fock.h"

#include <charconv>
#include <stdexcept>

namespace excalc {

namespace {

void check_mode(int index, Dim dim) {
    if (index < 1 || index > dim.value()) {
        throw std::out_of_range("mode " + std::to_string(index) + " outside 1.." + std::to_string(dim.value()));
    }
}

// (-1)^(number of occupied modes below `bit`).
double crossing_sign(uint32_t mask, uint32_t bit) { return (std::popcount(mask & (bit - 1)) & 1) ? -1.0 : 1.0; }

}  // namespace

LadderOp LadderOp::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("expected create:i or annihilate:i, got '" + std::string(text) + "'");
    }
    std::string_view kind = text.substr(0, colon);
    std::string_view num = text.substr(colon + 1);
    LadderOp op{};
    if (kind == "create") {
        op.action = LadderAction::create;
    } else if (kind == "annihilate") {
        op.action = LadderAction::annihilate;
    } else {
        throw std::invalid_argument("unknown ladder operator '" + std::string(kind) + "'");
    }
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), op.index);
    if (ec != std::errc{} || ptr != num.data() + num.size()) {
        throw std::invalid_argument("bad mode index '" + std::string(num) + "'");
    }
    return op;
}

std::string LadderOp::to_string() const {
    return (action == LadderAction::create ? "create:" : "annihilate:") + std::to_string(index);
}

Multivector apply_creation(int index, const Multivector& a) {
    check_mode(index, a.dim());
    uint32_t bit = uint32_t{1} << (index - 1);
    TermAccumulator acc(a.dim());
    for (const auto& [blade, c] : a.terms()) {
        if (!(blade.mask & bit)) {
            acc.add(Blade{blade.mask | bit}, crossing_sign(blade.mask, bit) * c);
        }
    }
    return acc.finish();
}

Multivector apply_annihilation(int index, const Multivector& a) {
    check_mode(index, a.dim());
    uint32_t bit = uint32_t{1} << (index - 1);
    TermAccumulator acc(a.dim());
    for (const auto& [blade, c] : a.terms()) {
        if (blade.mask & bit) {
            acc.add(Blade{blade.mask & ~bit}, crossing_sign(blade.mask, bit) * c);
        }
    }
    return acc.finish();
}

Multivector apply(LadderOp op, const Multivector& a) {
    return op.action == LadderAction::create ? apply_creation(op.index, a) : apply_annihilation(op.index, a);
}

namespace {

template <typename Single>
Multivector apply_string(Blade modes, const Multivector& a, Single single) {
    if (!modes.fits(a.dim())) {
        throw std::out_of_range("mode set exceeds dimension " + std::to_string(a.dim().value()));
    }
    std::vector<int> idx = modes.indices();
    Multivector out = a;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        out = single(*it, out);
    }
    return out;
}

}  // namespace

Multivector multi_create(Blade modes, const Multivector& a) { return apply_string(modes, a, apply_creation); }

Multivector multi_annihilate(Blade modes, const Multivector& a) {
    return apply_string(modes, a, apply_annihilation);
}

ComplexMatrix operator_matrix(LadderOp op, Dim dim) {
    if (dim.value() > kMaxOperatorMatrixDim) {
        throw std::invalid_argument("operator matrices are limited to d <= " +
                                    std::to_string(kMaxOperatorMatrixDim));
    }
    check_mode(op.index, dim);
    std::vector<Blade> basis = canonical_blades(dim);
    std::vector<size_t> position(dim.blade_count());
    for (size_t i = 0; i < basis.size(); ++i) {
        position[basis[i].mask] = i;
    }
    ComplexMatrix m(basis.size(), basis.size());
    for (size_t col = 0; col < basis.size(); ++col) {
        Multivector image = apply(op, Multivector::blade(dim, basis[col]));
        for (const auto& [blade, c] : image.terms()) {
            m(position[blade.mask], col) = c;
        }
    }
    return m;
}

}  // namespace excalc
