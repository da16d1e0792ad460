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

// d-qubit computational-basis states identified with blades: qubit i in |1>
// iff mode i is occupied. Exterior operations are pulled back through this
// bijection; a zero result marks a physically impossible operation.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "excalc/multivector.h"

namespace excalc {

/// |b_1, ..., b_d>; bit i-1 of `bits` holds qubit i.
struct QubitBasisState {
    Dim dim;
    uint32_t bits = 0;

    /// Accepts "101", "|101>", "|1,0,1>" and the ket form "|101⟩". The length
    /// of the bit string sets d. Throws std::invalid_argument.
    static QubitBasisState parse(std::string_view text);
    /// "|101⟩".
    std::string to_string() const;

    friend bool operator==(const QubitBasisState&, const QubitBasisState&) = default;
};

/// An unnormalized superposition of basis states. Amplitudes at or below
/// kPruneTolerance are dropped; the zero state has none.
class QubitState {
   public:
    using Amplitudes = std::map<Blade, Coeff, CanonicalOrder>;

    explicit QubitState(Dim dim) : dim_(dim) {}
    static QubitState basis(const QubitBasisState& s, Coeff amplitude = 1.0);
    /// Sums repeated basis states. Throws DimensionMismatch.
    static QubitState from_terms(Dim dim, const std::vector<std::pair<QubitBasisState, Coeff>>& terms);

    Dim dim() const { return dim_; }
    bool is_zero() const { return amps_.empty(); }
    /// Keyed by occupation mask (same encoding as blades), canonical order.
    const Amplitudes& amplitudes() const { return amps_; }
    Coeff amplitude(const QubitBasisState& s) const;

   private:
    friend QubitState n_inverse(const Multivector& a);
    QubitState(Dim dim, Amplitudes amps) : dim_(dim), amps_(std::move(amps)) {}

    Dim dim_;
    Amplitudes amps_;
};

QubitState operator+(const QubitState& a, const QubitState& b);
QubitState operator*(Coeff c, const QubitState& a);

/// Blade e_{i1}^...^e_{ik} for the qubits set to 1.
Multivector n_map(const QubitBasisState& s);
/// Linear extension of the basis map.
Multivector n_map(const QubitState& s);
/// Inverse of n_map; the zero multivector maps to the zero state.
QubitState n_inverse(const Multivector& a);

/// Fermionic meet and join of qubit states, and the star complement.
/// Throw DimensionMismatch.
QubitState q_wedge(const QubitState& a, const QubitState& b);
QubitState q_vee(const QubitState& a, const QubitState& b);
QubitState q_star(const QubitState& s);

/// True iff s is the zero state.
bool is_physically_impossible(const QubitState& s);

/// Ordinary Hilbert-space inner product sum conj(a_s) b_s over all basis
/// states. Unlike scalar_product it pairs states of different fermion number.
Coeff qubit_inner_product(const QubitState& a, const QubitState& b);

bool equal_approx(const QubitState& a, const QubitState& b, double tol = kPruneTolerance);

}  // namespace excalc
