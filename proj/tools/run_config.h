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

#ifndef LOPT_TOOLS_RUN_CONFIG_H
#define LOPT_TOOLS_RUN_CONFIG_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lopt/json_io.h"

namespace lopt::cli {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Everything a command needs. Unset fields fall back to the next layer
/// (flags, then config file, then defaults).
struct RunConfig {
    std::optional<std::string> command;   // run, decompose, verify
    std::optional<std::string> protocol;  // run
    std::optional<std::string> suite;     // verify
    std::optional<std::string> matrix;    // decompose: path of the matrix file
    std::optional<int> n;
    std::optional<std::string> strategy;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> trials;
    std::optional<int> threads;
    std::optional<double> tol;
    std::optional<std::string> out;
    std::optional<std::vector<Complex>> input;

    bool operator==(const RunConfig &) const = default;
};

Json to_json(const RunConfig &c);
/// Throws UsageError on unknown keys or wrong types.
RunConfig config_from_json(const Json &j);
RunConfig load_config(const std::string &path);

/// Fields set in `top` win over `base`.
RunConfig layer(const RunConfig &top, const RunConfig &base);

/// "re" or "re:im" items separated by commas.
std::vector<Complex> parse_input(const std::string &text);

}  // namespace lopt::cli

#endif
