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

#include "excalc/qubit.h"

#include <stdexcept>

#include "excalc/algebra.h"
#include "excalc/errors.h"

namespace excalc {

namespace {

constexpr std::string_view kKetClose = "\xE2\x9F\xA9";  // U+27E9

void require_same_dim(Dim a, Dim b) {
    if (a != b) {
        throw DimensionMismatch("qubit registers of different sizes: " + std::to_string(a.value()) + " vs " +
                                std::to_string(b.value()));
    }
}

}  // namespace

QubitBasisState QubitBasisState::parse(std::string_view text) {
    std::string_view body = text;
    bool ket = !body.empty() && body.front() == '|';
    if (ket) {
        body.remove_prefix(1);
        if (body.ends_with(kKetClose)) {
            body.remove_suffix(kKetClose.size());
        } else if (body.ends_with('>')) {
            body.remove_suffix(1);
        } else {
            throw std::invalid_argument("unterminated ket '" + std::string(text) + "'");
        }
    }
    // With commas every field is a single digit; without, every character is.
    bool separated = body.find(',') != std::string_view::npos;
    uint32_t bits = 0;
    int count = 0;
    for (size_t i = 0; i < body.size(); ++i) {
        char ch = body[i];
        if (separated && (i % 2 == 1)) {
            if (ch != ',') {
                throw std::invalid_argument("bad qubit basis state '" + std::string(text) + "'");
            }
            continue;
        }
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("bad qubit basis state '" + std::string(text) + "'");
        }
        if (count >= kMaxDim) {
            throw std::invalid_argument("qubit basis state longer than " + std::to_string(kMaxDim) + " bits");
        }
        if (ch == '1') {
            bits |= uint32_t{1} << count;
        }
        ++count;
    }
    if (count == 0 || (separated && body.size() % 2 == 0)) {
        throw std::invalid_argument("bad qubit basis state '" + std::string(text) + "'");
    }
    return QubitBasisState{Dim(count), bits};
}

std::string QubitBasisState::to_string() const {
    std::string out = "|";
    for (int i = 0; i < dim.value(); ++i) {
        out += ((bits >> i) & 1u) ? '1' : '0';
    }
    out += kKetClose;
    return out;
}

QubitState QubitState::basis(const QubitBasisState& s, Coeff amplitude) {
    return n_inverse(Multivector::blade(s.dim, Blade{s.bits}, amplitude));
}

QubitState QubitState::from_terms(Dim dim, const std::vector<std::pair<QubitBasisState, Coeff>>& terms) {
    TermAccumulator acc(dim);
    for (const auto& [state, amp] : terms) {
        require_same_dim(dim, state.dim);
        acc.add(Blade{state.bits}, amp);
    }
    return n_inverse(acc.finish());
}

Coeff QubitState::amplitude(const QubitBasisState& s) const {
    auto it = amps_.find(Blade{s.bits});
    return it == amps_.end() ? Coeff{} : it->second;
}

QubitState operator+(const QubitState& a, const QubitState& b) { return n_inverse(n_map(a) + n_map(b)); }

QubitState operator*(Coeff c, const QubitState& a) { return n_inverse(c * n_map(a)); }

Multivector n_map(const QubitBasisState& s) { return Multivector::blade(s.dim, Blade{s.bits}); }

Multivector n_map(const QubitState& s) {
    TermAccumulator acc(s.dim());
    for (const auto& [bits, amp] : s.amplitudes()) {
        acc.add(bits, amp);
    }
    return acc.finish();
}

QubitState n_inverse(const Multivector& a) { return QubitState(a.dim(), QubitState::Amplitudes(a.terms())); }

QubitState q_wedge(const QubitState& a, const QubitState& b) {
    require_same_dim(a.dim(), b.dim());
    return n_inverse(wedge(n_map(a), n_map(b)));
}

QubitState q_vee(const QubitState& a, const QubitState& b) {
    require_same_dim(a.dim(), b.dim());
    return n_inverse(vee(n_map(a), n_map(b)));
}

QubitState q_star(const QubitState& s) { return n_inverse(hodge(n_map(s))); }

bool is_physically_impossible(const QubitState& s) { return s.is_zero(); }

Coeff qubit_inner_product(const QubitState& a, const QubitState& b) {
    require_same_dim(a.dim(), b.dim());
    Coeff sum{};
    for (const auto& [bits, amp] : a.amplitudes()) {
        auto it = b.amplitudes().find(bits);
        if (it != b.amplitudes().end()) {
            sum += std::conj(amp) * it->second;
        }
    }
    return sum;
}

bool equal_approx(const QubitState& a, const QubitState& b, double tol) {
    return a.dim() == b.dim() && equal_approx(n_map(a), n_map(b), tol);
}

}  // namespace excalc
