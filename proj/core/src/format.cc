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

#include "excalc/format.h"

#include <array>
#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace excalc {

using json = nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view name) {
    if (name == "text") {
        return OutputFormat::text;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "csv") {
        return OutputFormat::csv;
    }
    throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string format_real(double x) {
    if (x == 0) {
        return "0";
    }
    std::array<char, 32> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

std::string format_coeff(Coeff c) {
    if (c.imag() == 0) {
        return format_real(c.real());
    }
    if (c.real() == 0) {
        return format_real(c.imag()) + "i";
    }
    std::string im = format_real(std::abs(c.imag())) + "i";
    return "(" + format_real(c.real()) + (c.imag() < 0 ? " - " : " + ") + im + ")";
}

std::string format_blade(Blade b, Dim dim) {
    if (b.mask == 0) {
        return "1";
    }
    if (b.mask == dim.full_mask()) {
        return "E";
    }
    std::string out;
    for (int i : b.indices()) {
        if (!out.empty()) {
            out += "^";
        }
        out += "e" + std::to_string(i);
    }
    return out;
}

namespace {

// One signed term. `label` is empty for the scalar part.
std::string render_term(Coeff c, const std::string& label) {
    if (label.empty()) {
        return format_coeff(c);
    }
    if (c == Coeff{1.0}) {
        return label;
    }
    if (c == Coeff{-1.0}) {
        return "-" + label;
    }
    return format_coeff(c) + "*" + label;
}

std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) {
        return "0";
    }
    std::string out = terms.front();
    for (size_t i = 1; i < terms.size(); ++i) {
        const std::string& t = terms[i];
        if (t.front() == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

json coeff_fields(json obj, Coeff c) {
    obj["re"] = c.real() == 0 ? 0.0 : c.real();
    obj["im"] = c.imag() == 0 ? 0.0 : c.imag();
    return obj;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

Coeff coeff_from(const json& j) {
    if (j.is_number()) {
        return Coeff{j.get<double>()};
    }
    if (j.is_object() && j.contains("re")) {
        double re = j.at("re").get<double>();
        double im = j.contains("im") ? j.at("im").get<double>() : 0.0;
        return Coeff{re, im};
    }
    throw std::invalid_argument("expected a number or {\"re\":..,\"im\":..}");
}

template <typename F>
auto rethrow_json(F body) {
    try {
        return body();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad JSON document: ") + e.what());
    }
}

}  // namespace

std::string to_text(const Multivector& a) {
    std::vector<std::string> terms;
    for (const auto& [b, c] : a.terms()) {
        terms.push_back(render_term(c, b.mask == 0 ? "" : format_blade(b, a.dim())));
    }
    return join_terms(terms);
}

std::string to_json(const Multivector& a) {
    json terms = json::array();
    for (const auto& [b, c] : a.terms()) {
        terms.push_back(coeff_fields(json{{"blade", b.indices()}}, c));
    }
    return json{{"dim", a.dim().value()}, {"terms", terms}}.dump();
}

std::string to_csv(const Multivector& a) {
    std::string out = "blade,re,im\n";
    for (const auto& [b, c] : a.terms()) {
        out += format_blade(b, a.dim()) + "," + format_real(c.real()) + "," + format_real(c.imag()) + "\n";
    }
    return out;
}

std::string format_mv(const Multivector& a, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json:
            return to_json(a);
        case OutputFormat::csv:
            return to_csv(a);
        case OutputFormat::text:
            break;
    }
    return to_text(a);
}

Multivector multivector_from_json(std::string_view text) {
    json doc = parse_json(text);
    return rethrow_json([&] {
        Dim dim(doc.at("dim").get<int>());
        TermAccumulator acc(dim);
        for (const json& term : doc.at("terms")) {
            std::vector<int> idx = term.at("blade").get<std::vector<int>>();
            acc.add(Blade::from_indices(dim, idx), coeff_from(term));
        }
        return acc.finish();
    });
}

std::string to_text(const QubitState& s) {
    std::vector<std::string> terms;
    for (const auto& [bits, amp] : s.amplitudes()) {
        terms.push_back(render_term(amp, QubitBasisState{s.dim(), bits.mask}.to_string()));
    }
    return join_terms(terms);
}

std::string to_json(const QubitState& s) {
    json amps = json::array();
    for (const auto& [bits, amp] : s.amplitudes()) {
        std::string ket = QubitBasisState{s.dim(), bits.mask}.to_string();
        std::string raw = ket.substr(1, static_cast<size_t>(s.dim().value()));
        amps.push_back(coeff_fields(json{{"bits", raw}}, amp));
    }
    return json{{"d", s.dim().value()}, {"amps", amps}}.dump();
}

QubitState qubit_state_from_json(std::string_view text) {
    json doc = parse_json(text);
    return rethrow_json([&] {
        Dim dim(doc.at("d").get<int>());
        std::vector<std::pair<QubitBasisState, Coeff>> terms;
        for (const json& amp : doc.at("amps")) {
            terms.emplace_back(QubitBasisState::parse(amp.at("bits").get<std::string>()), coeff_from(amp));
        }
        return QubitState::from_terms(dim, terms);
    });
}

ExtensorFactors factors_from_json(std::string_view text) {
    json doc = parse_json(text);
    return rethrow_json([&] {
        Dim dim(doc.at("dim").get<int>());
        std::vector<VectorC> factors;
        for (const json& vec : doc.at("factors")) {
            std::vector<Coeff> comps;
            for (const json& c : vec) {
                comps.push_back(coeff_from(c));
            }
            factors.emplace_back(dim, std::move(comps));
        }
        return ExtensorFactors(dim, std::move(factors));
    });
}

std::string to_json(const ExtensorFactors& x) {
    json factors = json::array();
    for (const VectorC& v : x.factors()) {
        json comps = json::array();
        for (Coeff c : v.components()) {
            comps.push_back(coeff_fields(json::object(), c));
        }
        factors.push_back(comps);
    }
    return json{{"dim", x.dim().value()}, {"factors", factors}}.dump();
}

}  // namespace excalc
