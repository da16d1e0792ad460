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

#include <functional>
#include <string>
#include <vector>

namespace excalc::acceptance {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;
};

struct Criterion {
    std::string id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::vector<Criterion> criteria();

Outcome reference_join_table();
Outcome reference_set_table();
Outcome reference_qubit_table();
Outcome worked_examples();
Outcome identity_suite();
Outcome join_equivalence();
Outcome fock_relations();
Outcome subspace_oracle();
Outcome scalar_product_suite();
Outcome parser_robustness();

/// Counts checks and keeps the first few failure descriptions.
class Tally {
   public:
    void check(bool ok, const std::string& what);
    int total() const { return total_; }
    int failed() const { return failed_; }
    /// "n/m checks" plus the first failures.
    Outcome outcome(const std::string& what) const;

   private:
    int total_ = 0;
    int failed_ = 0;
    std::vector<std::string> first_;
};

}  // namespace excalc::acceptance
