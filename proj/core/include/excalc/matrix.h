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
#include <cstddef>
#include <vector>

namespace excalc {

/// Small dense row-major complex matrix.
class ComplexMatrix {
   public:
    using value_type = std::complex<double>;

    ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static ComplexMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    value_type& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix adjoint() const;
    double max_abs() const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

   private:
    size_t rows_;
    size_t cols_;
    std::vector<value_type> data_;
};

/// Pivots at or below this fraction of the largest entry count as zero.
inline constexpr double kSingularTolerance = 1e-12;

/// Determinant by Gaussian elimination with partial pivoting on magnitude.
/// Returns exactly zero once a pivot falls below kSingularTolerance times the
/// largest entry. Throws std::invalid_argument for non-square input.
std::complex<double> determinant(ComplexMatrix m);

/// Numerical rank from row reduction with the same relative threshold.
size_t rank(ComplexMatrix m, double relative_tol = kSingularTolerance);

/// Basis of {x : m x = 0}, one vector per free column of the reduced form.
std::vector<std::vector<std::complex<double>>> null_space(ComplexMatrix m,
                                                          double relative_tol = kSingularTolerance);

}  // namespace excalc
