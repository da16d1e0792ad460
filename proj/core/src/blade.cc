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

#include <algorithm>
#include <stdexcept>
#include <string>

namespace excalc {

Dim::Dim(int d) : d_(d) {
    if (d < 1 || d > kMaxDim) {
        throw std::invalid_argument("dimension must be in 1.." + std::to_string(kMaxDim) + ", got " +
                                    std::to_string(d));
    }
}

std::vector<int> Blade::indices() const {
    std::vector<int> out;
    out.reserve(step());
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        out.push_back(std::countr_zero(rest) + 1);
    }
    return out;
}

Blade Blade::from_indices(Dim d, std::span<const int> indices) {
    Blade b;
    for (int i : indices) {
        if (i < 1 || i > d.value()) {
            throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(d.value()));
        }
        uint32_t bit = uint32_t{1} << (i - 1);
        if (b.mask & bit) {
            throw std::invalid_argument("index " + std::to_string(i) + " repeated in blade");
        }
        b.mask |= bit;
    }
    return b;
}

std::vector<Blade> canonical_blades(Dim d) {
    std::vector<Blade> out;
    out.reserve(d.blade_count());
    for (uint32_t m = 0; m <= d.full_mask(); ++m) {
        out.push_back(Blade{m});
    }
    std::sort(out.begin(), out.end(), CanonicalOrder{});
    return out;
}

int wedge_sign(Blade s, Blade t) {
    if (s.mask & t.mask) {
        return 0;
    }
    int crossings = 0;
    for (uint32_t rest = t.mask; rest != 0; rest &= rest - 1) {
        uint32_t low = rest & (~rest + 1);
        uint32_t above = ~((low << 1) - 1);
        crossings += std::popcount(s.mask & above);
    }
    return (crossings & 1) ? -1 : 1;
}

int hodge_sign(Blade b) {
    int k = b.step();
    int exponent = -k * (k + 1) / 2;
    for (uint32_t rest = b.mask; rest != 0; rest &= rest - 1) {
        exponent += std::countr_zero(rest) + 1;
    }
    return (exponent & 1) ? -1 : 1;
}

}  // namespace excalc
