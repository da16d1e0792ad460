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

#include <complex>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "excalc/blade.h"

namespace excalc {

using Coeff = std::complex<double>;

/// Coefficients with magnitude at or below this are dropped after every
/// operation.
inline constexpr double kPruneTolerance = 1e-12;

/// An element of the Grassmann space over V(d): a sparse sum of blades with
/// complex coefficients. The zero multivector has no terms and is distinct
/// from the vacuum scalar 1.
///
/// Values are immutable once built; every algebra operation returns a new
/// Multivector. Use TermAccumulator to assemble one term by term.
class Multivector {
   public:
    using Terms = std::map<Blade, Coeff, CanonicalOrder>;

    /// The zero multivector.
    explicit Multivector(Dim dim) : dim_(dim) {}

    static Multivector scalar(Dim dim, Coeff value);
    static Multivector blade(Dim dim, Blade b, Coeff value = 1.0);
    static Multivector from_indices(Dim dim, std::span<const int> indices);
    static Multivector from_indices(Dim dim, std::initializer_list<int> indices) {
        return from_indices(dim, std::span<const int>(indices.begin(), indices.size()));
    }
    static Multivector vacuum(Dim dim) { return scalar(dim, 1.0); }
    static Multivector top(Dim dim) { return blade(dim, Blade::full(dim)); }
    static Multivector basis_vector(Dim dim, int index) { return from_indices(dim, {index}); }

    Dim dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    /// Coefficient of `b`, zero when absent.
    Coeff coeff(Blade b) const;

   private:
    friend class TermAccumulator;
    Multivector(Dim dim, Terms terms) : dim_(dim), terms_(std::move(terms)) {}

    Dim dim_;
    Terms terms_;
};

/// Dense scratch buffer indexed by blade mask. finish() prunes coefficients
/// at kPruneTolerance and returns the sparse value.
class TermAccumulator {
   public:
    explicit TermAccumulator(Dim dim);

    /// Throws std::domain_error on a non-finite coefficient and
    /// std::out_of_range on a blade outside the dimension.
    void add(Blade b, Coeff value);
    Multivector finish() const;

   private:
    Dim dim_;
    std::vector<Coeff> dense_;
};

Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a);
Multivector operator*(Coeff c, const Multivector& a);
inline Multivector operator*(const Multivector& a, Coeff c) { return c * a; }

/// Largest coefficient-wise |a - b|. Throws DimensionMismatch.
double max_abs_difference(const Multivector& a, const Multivector& b);

/// True iff the dimensions agree and every coefficient differs by at most tol.
bool equal_approx(const Multivector& a, const Multivector& b, double tol = kPruneTolerance);

void require_same_dim(const Multivector& a, const Multivector& b);

}  // namespace excalc
