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

#include "excalc/matrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace excalc {

using Complex = std::complex<double>;

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

double ComplexMatrix::max_abs() const {
    double worst = 0.0;
    for (const auto& v : data_) {
        worst = std::max(worst, std::abs(v));
    }
    return worst;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("matrix product shape mismatch");
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (size_t r = 0; r < a.rows_; ++r) {
        for (size_t k = 0; k < a.cols_; ++k) {
            Complex v = a(r, k);
            if (v == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < b.cols_; ++c) {
                out(r, c) += v * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix sum shape mismatch");
    }
    ComplexMatrix out = a;
    for (size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] += b.data_[i];
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix difference shape mismatch");
    }
    ComplexMatrix out = a;
    for (size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] -= b.data_[i];
    }
    return out;
}

Complex determinant(ComplexMatrix m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    size_t n = m.rows();
    if (n == 0) {
        return 1.0;
    }
    double threshold = kSingularTolerance * m.max_abs();
    Complex det = 1.0;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; ++r) {
            if (std::abs(m(r, col)) > std::abs(m(pivot, col))) {
                pivot = r;
            }
        }
        if (std::abs(m(pivot, col)) <= threshold) {
            return 0.0;
        }
        if (pivot != col) {
            for (size_t c = col; c < n; ++c) {
                std::swap(m(pivot, c), m(col, c));
            }
            det = -det;
        }
        Complex p = m(col, col);
        det *= p;
        for (size_t r = col + 1; r < n; ++r) {
            Complex factor = m(r, col) / p;
            if (factor == Complex{}) {
                continue;
            }
            for (size_t c = col + 1; c < n; ++c) {
                m(r, c) -= factor * m(col, c);
            }
        }
    }
    return det;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
std::vector<size_t> reduce_rows(ComplexMatrix& m, double relative_tol) {
    double threshold = relative_tol * m.max_abs();
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t best = row;
        for (size_t r = row + 1; r < m.rows(); ++r) {
            if (std::abs(m(r, col)) > std::abs(m(best, col))) {
                best = r;
            }
        }
        if (std::abs(m(best, col)) <= threshold) {
            for (size_t r = row; r < m.rows(); ++r) {
                m(r, col) = 0.0;
            }
            continue;
        }
        for (size_t c = 0; c < m.cols(); ++c) {
            std::swap(m(best, c), m(row, c));
        }
        Complex p = m(row, col);
        for (size_t c = col; c < m.cols(); ++c) {
            m(row, c) /= p;
        }
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row) {
                continue;
            }
            Complex factor = m(r, col);
            if (factor == Complex{}) {
                continue;
            }
            for (size_t c = col; c < m.cols(); ++c) {
                m(r, c) -= factor * m(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

size_t rank(ComplexMatrix m, double relative_tol) { return reduce_rows(m, relative_tol).size(); }

std::vector<std::vector<Complex>> null_space(ComplexMatrix m, double relative_tol) {
    std::vector<size_t> pivots = reduce_rows(m, relative_tol);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<Complex>> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Complex> x(m.cols());
        x[free] = 1.0;
        for (size_t r = 0; r < pivots.size(); ++r) {
            x[pivots[r]] = -m(r, free);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace excalc
