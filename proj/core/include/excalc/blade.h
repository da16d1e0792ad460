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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace excalc {

inline constexpr int kMaxDim = 16;

/// Number of one-fermion states d, i.e. the size of the orthonormal basis
/// e_1..e_d. Valid range is 1..kMaxDim.
class Dim {
   public:
    explicit Dim(int d);

    int value() const { return d_; }
    uint32_t full_mask() const { return (uint32_t{1} << d_) - 1; }
    size_t blade_count() const { return size_t{1} << d_; }

    friend bool operator==(Dim, Dim) = default;

   private:
    int d_;
};

/// A basis extensor e_{i1}^...^e_{ik} with i1 < ... < ik, stored as an
/// occupation mask where bit i-1 is set iff index i is present. The empty
/// mask is the fermionic vacuum 1.
struct Blade {
    uint32_t mask = 0;

    int step() const { return std::popcount(mask); }
    bool contains(int index) const { return index >= 1 && index <= 32 && (mask >> (index - 1)) & 1u; }
    bool fits(Dim d) const { return (mask & ~d.full_mask()) == 0; }

    /// Ascending 1-based indices.
    std::vector<int> indices() const;

    /// Throws std::out_of_range for indices outside 1..d and
    /// std::invalid_argument for repeated indices.
    static Blade from_indices(Dim d, std::span<const int> indices);
    static Blade full(Dim d) { return Blade{d.full_mask()}; }

    friend bool operator==(Blade, Blade) = default;
};

/// Orders blades by step, then lexicographically by the ascending index list.
struct CanonicalOrder {
    bool operator()(Blade a, Blade b) const {
        int sa = a.step();
        int sb = b.step();
        if (sa != sb) {
            return sa < sb;
        }
        uint32_t diff = a.mask ^ b.mask;
        if (diff == 0) {
            return false;
        }
        // The set holding the smallest differing index sorts first.
        uint32_t lowest = diff & (~diff + 1);
        return (a.mask & lowest) != 0;
    }
};

/// All 2^d blades in canonical order.
std::vector<Blade> canonical_blades(Dim d);

/// Sign (+1 or -1) of e_S ^ e_T relative to e_{S u T}, or 0 when S and T
/// overlap. The sign is the parity of |{(i, j) : i in S, j in T, i > j}|.
int wedge_sign(Blade s, Blade t);

/// Sign of the Hodge complement of a blade: (-1)^(i1+...+ik - k(k+1)/2).
int hodge_sign(Blade b);

}  // namespace excalc
