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

#include "excalc/extensor.h"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "excalc/algebra.h"
#include "excalc/errors.h"
#include "excalc/matrix.h"

namespace excalc {

VectorC::VectorC(Dim dim, std::vector<Coeff> components) : dim_(dim), components_(std::move(components)) {
    if (components_.size() != static_cast<size_t>(dim.value())) {
        throw std::invalid_argument("vector has " + std::to_string(components_.size()) + " components, expected " +
                                    std::to_string(dim.value()));
    }
    for (const Coeff& c : components_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::domain_error("non-finite vector component");
        }
    }
}

VectorC VectorC::basis(Dim dim, int index) {
    if (index < 1 || index > dim.value()) {
        throw std::out_of_range("basis index " + std::to_string(index) + " outside 1.." +
                                std::to_string(dim.value()));
    }
    std::vector<Coeff> comps(dim.value());
    comps[index - 1] = 1.0;
    return VectorC(dim, std::move(comps));
}

VectorC operator+(const VectorC& a, const VectorC& b) {
    if (a.dim_ != b.dim_) {
        throw DimensionMismatch("vector dimension mismatch");
    }
    std::vector<Coeff> out(a.components_);
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] += b.components_[i];
    }
    return VectorC(a.dim_, std::move(out));
}

VectorC operator*(Coeff c, const VectorC& a) {
    std::vector<Coeff> out(a.components_);
    for (auto& v : out) {
        v *= c;
    }
    return VectorC(a.dim_, std::move(out));
}

ExtensorFactors::ExtensorFactors(Dim dim, std::vector<VectorC> factors) : dim_(dim), factors_(std::move(factors)) {
    if (factors_.size() > static_cast<size_t>(dim.value())) {
        throw std::invalid_argument("an extensor in dimension " + std::to_string(dim.value()) + " has at most " +
                                    std::to_string(dim.value()) + " factors");
    }
    for (const auto& f : factors_) {
        if (f.dim() != dim) {
            throw DimensionMismatch("factor dimension differs from extensor dimension");
        }
    }
}

namespace {

ComplexMatrix columns_matrix(size_t rows, std::span<const VectorC> columns) {
    ComplexMatrix m(rows, columns.size());
    for (size_t c = 0; c < columns.size(); ++c) {
        auto comps = columns[c].components();
        for (size_t r = 0; r < rows; ++r) {
            m(r, c) = comps[r];
        }
    }
    return m;
}

// Advances an ascending combination of positions in [0, n); false when done.
bool next_combination(std::vector<int>& comb, int n) {
    int h = static_cast<int>(comb.size());
    int i = h - 1;
    while (i >= 0 && comb[i] == n - h + i) {
        --i;
    }
    if (i < 0) {
        return false;
    }
    ++comb[i];
    for (int j = i + 1; j < h; ++j) {
        comb[j] = comb[j - 1] + 1;
    }
    return true;
}

}  // namespace

Multivector expand(const ExtensorFactors& x) {
    Dim dim = x.dim();
    int k = x.step();
    if (k == 0) {
        return Multivector::vacuum(dim);
    }
    TermAccumulator acc(dim);
    for (uint32_t mask = 0; mask <= dim.full_mask(); ++mask) {
        if (std::popcount(mask) != k) {
            continue;
        }
        std::vector<int> rows = Blade{mask}.indices();
        ComplexMatrix minor(k, k);
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < k; ++c) {
                minor(r, c) = x.factors()[c][rows[r]];
            }
        }
        acc.add(Blade{mask}, determinant(std::move(minor)));
    }
    return acc.finish();
}

std::vector<Split> enumerate_splits(const ExtensorFactors& x, int h) {
    int k = x.step();
    if (h < 0 || h > k) {
        throw std::invalid_argument("split class (" + std::to_string(h) + ", " + std::to_string(k - h) +
                                    ") invalid for step " + std::to_string(k));
    }
    std::vector<Split> out;
    std::vector<int> comb(h);
    std::iota(comb.begin(), comb.end(), 0);
    do {
        std::vector<bool> in_first(k, false);
        for (int p : comb) {
            in_first[p] = true;
        }
        std::vector<VectorC> first;
        std::vector<VectorC> second;
        int inversions = 0;
        int firsts_seen = 0;
        for (int p = 0; p < k; ++p) {
            if (in_first[p]) {
                first.push_back(x.factors()[p]);
                ++firsts_seen;
            } else {
                second.push_back(x.factors()[p]);
                // Every later first-part factor must cross this one.
                inversions += h - firsts_seen;
            }
        }
        out.push_back(Split{(inversions & 1) ? -1 : 1, ExtensorFactors(x.dim(), std::move(first)),
                            ExtensorFactors(x.dim(), std::move(second))});
    } while (next_combination(comb, k));
    return out;
}

Coeff det_columns(std::span<const VectorC> columns) {
    if (columns.empty()) {
        throw std::invalid_argument("determinant needs d columns, got 0");
    }
    Dim dim = columns.front().dim();
    size_t d = static_cast<size_t>(dim.value());
    if (columns.size() != d) {
        throw std::invalid_argument("determinant needs " + std::to_string(d) + " columns, got " +
                                    std::to_string(columns.size()));
    }
    for (const auto& v : columns) {
        if (v.dim() != dim) {
            throw DimensionMismatch("determinant columns of different dimensions");
        }
    }
    return determinant(columns_matrix(d, columns));
}

Coeff det_columns(std::initializer_list<const ExtensorFactors*> blocks) {
    std::vector<VectorC> cols;
    for (const ExtensorFactors* block : blocks) {
        cols.insert(cols.end(), block->factors().begin(), block->factors().end());
    }
    return det_columns(cols);
}

Multivector join_by_splits(const ExtensorFactors& a, const ExtensorFactors& b, JoinVariant variant) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("join operands have different dimensions");
    }
    Dim dim = a.dim();
    int d = dim.value();
    int k = a.step();
    int l = b.step();
    Multivector result(dim);
    if (k + l < d) {
        return result;
    }
    if (variant == JoinVariant::split_first) {
        for (const Split& s : enumerate_splits(a, d - l)) {
            Coeff det = det_columns({&s.part1, &b});
            if (det != Coeff{}) {
                result = result + static_cast<double>(s.sign) * det * expand(s.part2);
            }
        }
    } else {
        for (const Split& s : enumerate_splits(b, k + l - d)) {
            Coeff det = det_columns({&a, &s.part2});
            if (det != Coeff{}) {
                result = result + static_cast<double>(s.sign) * det * expand(s.part1);
            }
        }
    }
    return result;
}

TripleDet triple_det(const ExtensorFactors& a, const ExtensorFactors& b, const ExtensorFactors& c) {
    if (a.dim() != b.dim() || b.dim() != c.dim()) {
        throw DimensionMismatch("triple determinant operands have different dimensions");
    }
    Dim dim = a.dim();
    if (a.step() + b.step() + c.step() != dim.value()) {
        throw std::invalid_argument("triple determinant needs steps summing to " + std::to_string(dim.value()));
    }
    Multivector ea = expand(a);
    Multivector eb = expand(b);
    Multivector ec = expand(c);
    TripleDet out;
    out.join_of_meet = vee(ea, wedge(eb, ec)).coeff(Blade{});
    out.meet_then_join = vee(wedge(ea, eb), ec).coeff(Blade{});
    out.determinant = det_columns({&a, &b, &c});
    out.literal_wedge_of_join = wedge(ea, vee(eb, ec)).coeff(Blade::full(dim));
    return out;
}

size_t rank_of(std::span<const VectorC> vectors) {
    if (vectors.empty()) {
        return 0;
    }
    return rank(columns_matrix(vectors.front().dim().value(), vectors));
}

namespace {

std::vector<VectorC> concat(std::span<const VectorC> u, std::span<const VectorC> w) {
    std::vector<VectorC> all(u.begin(), u.end());
    all.insert(all.end(), w.begin(), w.end());
    return all;
}

}  // namespace

size_t intersection_dim(std::span<const VectorC> u, std::span<const VectorC> w) {
    return rank_of(u) + rank_of(w) - rank_of(concat(u, w));
}

std::vector<VectorC> intersection_basis(std::span<const VectorC> u, std::span<const VectorC> w) {
    if (u.empty() || w.empty()) {
        return {};
    }
    Dim dim = u.front().dim();
    size_t d = static_cast<size_t>(dim.value());
    // Solve U x = W y through the kernel of [U | -W].
    ComplexMatrix m(d, u.size() + w.size());
    for (size_t c = 0; c < u.size(); ++c) {
        for (size_t r = 0; r < d; ++r) {
            m(r, c) = u[c].components()[r];
        }
    }
    for (size_t c = 0; c < w.size(); ++c) {
        for (size_t r = 0; r < d; ++r) {
            m(r, u.size() + c) = -w[c].components()[r];
        }
    }
    std::vector<VectorC> basis;
    for (const auto& x : null_space(std::move(m))) {
        std::vector<Coeff> v(d);
        for (size_t c = 0; c < u.size(); ++c) {
            for (size_t r = 0; r < d; ++r) {
                v[r] += x[c] * u[c].components()[r];
            }
        }
        VectorC candidate(dim, std::move(v));
        basis.push_back(candidate);
        // Kernel directions of U alone map to zero or repeat earlier ones.
        if (rank_of(basis) < basis.size()) {
            basis.pop_back();
        }
    }
    return basis;
}

bool span_covers(std::span<const VectorC> u, std::span<const VectorC> w) {
    std::vector<VectorC> all = concat(u, w);
    if (all.empty()) {
        return false;
    }
    return rank_of(all) == static_cast<size_t>(all.front().dim().value());
}

std::vector<VectorC> annihilator(const Multivector& a) {
    Dim dim = a.dim();
    int d = dim.value();
    std::vector<Blade> blades = canonical_blades(dim);
    std::vector<size_t> row_of(dim.blade_count());
    for (size_t r = 0; r < blades.size(); ++r) {
        row_of[blades[r].mask] = r;
    }
    ComplexMatrix m(blades.size(), d);
    for (int i = 1; i <= d; ++i) {
        Multivector image = wedge(Multivector::basis_vector(dim, i), a);
        for (const auto& [blade, c] : image.terms()) {
            m(row_of[blade.mask], i - 1) = c;
        }
    }
    std::vector<VectorC> out;
    for (auto& x : null_space(std::move(m))) {
        out.emplace_back(dim, std::move(x));
    }
    return out;
}

bool is_decomposable(const Multivector& a) {
    if (a.is_zero()) {
        throw GradeError("decomposability is undefined for the zero multivector");
    }
    auto step = step_of(a);
    if (!step) {
        throw GradeError("decomposability needs a homogeneous multivector");
    }
    return annihilator(a).size() == static_cast<size_t>(*step);
}

}  // namespace excalc
