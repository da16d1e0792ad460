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

#include <iosfwd>
#include <string>
#include <string_view>

#include "excalc/expr/eval.h"

namespace excalc {

/// Line-oriented session. Besides expressions it understands
///   :dim d            reset with a new dimension
///   :let name = expr  bind a multivector
///   :table op         print a basis table
///   :quit
class Repl {
   public:
    explicit Repl(Dim dim) : env_(dim) {}

    struct Reply {
        std::string text;
        bool ok = true;
        bool quit = false;
    };

    /// Never throws; errors come back as text with ok = false.
    Reply handle(std::string_view line);

    /// Reads until EOF or :quit. Prompts only when `interactive`.
    void run(std::istream& in, std::ostream& out, bool interactive);

    const expr::Environment& environment() const { return env_; }

   private:
    Reply command(std::string_view line);

    expr::Environment env_;
};

}  // namespace excalc
