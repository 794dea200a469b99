// Copyright 2026 The lopt Authors
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

#ifndef LOPT_VERIFY_H
#define LOPT_VERIFY_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lopt {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double worst_error = 0;  // largest deviation seen, in the criterion's own units
    double tolerance = 0;
    double seconds = 0;
    double time_limit = 0;  // 0: none
    std::string detail;     // first failing check, or a short summary
};

struct VerifyOptions {
    std::uint64_t seed = 20260;
    std::optional<double> tol;  // replaces every default tolerance when set
    int threads = 1;            // Monte-Carlo workers
};

/// "probabilities", "oracles", "states", "resources" or "all".
std::vector<std::string> suite_names();

/// Criterion ids of a suite. Throws std::invalid_argument for unknown names.
std::vector<int> suite_criteria(const std::string &suite);

CriterionResult run_criterion(int id, const VerifyOptions &opts = {});

std::vector<CriterionResult> run_suite(const std::string &suite, const VerifyOptions &opts = {});

/// "PASS  3  name  err=... tol=... 0.12s" style line.
std::string format_line(const CriterionResult &r);

}  // namespace lopt

#endif
