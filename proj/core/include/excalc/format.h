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

#include <string>
#include <string_view>

#include "excalc/extensor.h"
#include "excalc/multivector.h"
#include "excalc/qubit.h"

namespace excalc {

enum class OutputFormat { text, json, csv };

/// Throws std::invalid_argument for anything but "text", "json", "csv".
OutputFormat parse_output_format(std::string_view name);

/// Shortest decimal that reads back to the same double; -0 prints as "0".
std::string format_real(double x);
/// "2", "-0.5", "2.5i", "(1 - 2i)". Every form reparses as an expression.
std::string format_coeff(Coeff c);

/// "1" for the empty blade, "E" for the full one, otherwise "e1^e3".
std::string format_blade(Blade b, Dim dim);

/// Terms in canonical order joined by " + " and " - ", e.g. "1 + 2*e1 - E".
/// The zero multivector is "0". The output reparses to the same value.
std::string to_text(const Multivector& a);
/// {"dim":d,"terms":[{"blade":[1,3],"re":..,"im":..}, ...]}
std::string to_json(const Multivector& a);
/// Header "blade,re,im", then one row per term.
std::string to_csv(const Multivector& a);
std::string format_mv(const Multivector& a, OutputFormat fmt);

/// Inverse of to_json. Throws std::invalid_argument.
Multivector multivector_from_json(std::string_view text);

/// "2.5*|10⟩ - |11⟩"; the zero state is "0".
std::string to_text(const QubitState& s);
/// {"d":d,"amps":[{"bits":"10","re":..,"im":..}, ...]}
std::string to_json(const QubitState& s);
QubitState qubit_state_from_json(std::string_view text);

/// {"dim":d,"factors":[[c1, c2, ...], ...]}; each entry is a number or
/// {"re":..,"im":..}. Throws std::invalid_argument.
ExtensorFactors factors_from_json(std::string_view text);
std::string to_json(const ExtensorFactors& x);

}  // namespace excalc
