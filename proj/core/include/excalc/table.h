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

// Truth tables of a binary operation over every pair of basis elements.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "excalc/format.h"

namespace excalc {

enum class TableOp { wedge, vee, pseudo_wedge, pseudo_vee, q_wedge, q_vee };

inline constexpr int kMaxTableDim = 6;

/// Accepts "wedge", "vee", "pseudo-wedge", "pseudo-vee", "q-wedge", "q-vee".
/// Throws std::invalid_argument.
TableOp parse_table_op(std::string_view name);
const char* to_string(TableOp op);

/// nullopt marks an operation outside its domain.
using Cell = std::optional<std::string>;

struct Table {
    TableOp op;
    Dim dim;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// All 2^d x 2^d pairs in canonical order. Pseudo tables put the second
/// operand in the outer loop and add the union or intersection column.
/// Throws std::invalid_argument for d above kMaxTableDim.
Table build_table(TableOp op, Dim dim);

std::string render_table(const Table& t, OutputFormat fmt);

}  // namespace excalc
