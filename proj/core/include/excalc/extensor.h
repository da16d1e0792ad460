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

// Decomposable extensors x_1^...^x_k kept as their factor lists. This is the
// determinant side of the algebra: expansion into blades by minors, the
// split-sum form of the join, and subspace queries (rank, intersection,
// span) on the factor vectors.

#pragma once

#include <span>
#include <vector>

#include "excalc/multivector.h"

namespace excalc {

/// A vector of V(d) by its components in the orthonormal basis e_1..e_d.
class VectorC {
   public:
    /// Throws std::invalid_argument when the component count differs from d
    /// and std::domain_error on non-finite components.
    VectorC(Dim dim, std::vector<Coeff> components);
    static VectorC basis(Dim dim, int index);

    Dim dim() const { return dim_; }
    std::span<const Coeff> components() const { return components_; }
    /// 1-based component.
    Coeff operator[](int index) const { return components_[index - 1]; }

    friend VectorC operator+(const VectorC& a, const VectorC& b);
    friend VectorC operator*(Coeff c, const VectorC& a);

   private:
    Dim dim_;
    std::vector<Coeff> components_;
};

/// Ordered factor list of an extensor. Zero factors denote the scalar 1.
class ExtensorFactors {
   public:
    explicit ExtensorFactors(Dim dim) : dim_(dim) {}
    /// Throws DimensionMismatch if a factor has another dimension and
    /// std::invalid_argument if there are more than d factors.
    ExtensorFactors(Dim dim, std::vector<VectorC> factors);

    Dim dim() const { return dim_; }
    int step() const { return static_cast<int>(factors_.size()); }
    const std::vector<VectorC>& factors() const { return factors_; }

   private:
    Dim dim_;
    std::vector<VectorC> factors_;
};

/// One term of a split sum: parent = sign * part1 ^ part2, with the parts
/// keeping the parent's relative factor order.
struct Split {
    int sign = 1;
    ExtensorFactors part1;
    ExtensorFactors part2;
};

/// Expands into blades: the coefficient of e_S is the minor of rows S.
/// Linearly dependent factors give the zero multivector.
Multivector expand(const ExtensorFactors& x);

/// All C(k, h) splits of class (h, k-h), first parts in lexicographic order
/// of original positions. Throws std::invalid_argument unless 0 <= h <= k.
std::vector<Split> enumerate_splits(const ExtensorFactors& x, int h);

enum class JoinVariant {
    /// Sum over splits of A: sgn(A1, A2) det(A1, B) A2.
    split_first,
    /// Sum over splits of B: sgn(B1, B2) det(A, B2) B1.
    split_second,
};

/// Regressive product of two extensors evaluated by a split sum. Zero when
/// step(a) + step(b) < d. Throws DimensionMismatch.
Multivector join_by_splits(const ExtensorFactors& a, const ExtensorFactors& b,
                           JoinVariant variant = JoinVariant::split_first);

/// Determinant of the d x d matrix whose columns are the given vectors.
/// Throws std::invalid_argument unless there are exactly d vectors of
/// dimension d.
Coeff det_columns(std::span<const VectorC> columns);

/// Column concatenation of several factor lists, then det_columns.
Coeff det_columns(std::initializer_list<const ExtensorFactors*> blocks);

/// The three-extensor determinant identity for step(A)+step(B)+step(C) = d.
struct TripleDet {
    Coeff join_of_meet;    // scalar part of A v (B ^ C)
    Coeff meet_then_join;  // scalar part of (A ^ B) v C
    Coeff determinant;     // det(A, B, C)
    /// E-coefficient of A ^ (B v C). B v C has step -step(A), so it vanishes
    /// once step(A) >= 1 and is a scalar otherwise; this is always zero.
    Coeff literal_wedge_of_join;
};

/// Throws std::invalid_argument when the steps do not sum to d.
TripleDet triple_det(const ExtensorFactors& a, const ExtensorFactors& b, const ExtensorFactors& c);

/// Numerical rank of a set of vectors.
size_t rank_of(std::span<const VectorC> vectors);

/// dim(span U intersect span W) = rank U + rank W - rank(U u W).
size_t intersection_dim(std::span<const VectorC> u, std::span<const VectorC> w);

/// A basis of span U intersect span W.
std::vector<VectorC> intersection_basis(std::span<const VectorC> u, std::span<const VectorC> w);

/// True iff U and W together span all of V(d).
bool span_covers(std::span<const VectorC> u, std::span<const VectorC> w);

/// Basis of the annihilator {v in V(d) : v ^ a = 0}.
std::vector<VectorC> annihilator(const Multivector& a);

/// True iff the annihilator of a has dimension step(a). Throws GradeError
/// for zero or mixed-grade input.
bool is_decomposable(const Multivector& a);

}  // namespace excalc
