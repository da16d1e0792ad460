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

#include <stdexcept>

namespace excalc {

/// Operands live in Grassmann spaces of different dimension.
class DimensionMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An operation that is only defined within a single step received mixed or
/// mismatched grades (e.g. the scalar product of e1 with E).
class GradeError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

}  // namespace excalc
