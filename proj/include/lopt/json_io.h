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

#ifndef LOPT_JSON_IO_H
#define LOPT_JSON_IO_H

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "lopt/fock_state.h"
#include "lopt/linear_optics.h"
#include "lopt/measurement.h"
#include "lopt/protocol.h"
#include "lopt/resources.h"

namespace lopt {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// {"modes": m, "terms": [{"occ": [...], "re": x, "im": y}, ...]} in canonical order.
Json state_to_json(const FockState &s);
FockState state_from_json(const Json &j);

/// {"modes": m, "global_phase": {"re", "im"}, "elements": [{"kind": "bs"|"ps", "modes": [...], "theta": x}]}.
Json netlist_to_json(const ElementSequence &seq);
ElementSequence netlist_from_json(const Json &j);

/// {"matrix": [[[re, im], ...], ...]}, rows first.
Json matrix_to_json(const Eigen::MatrixXcd &m);
Eigen::MatrixXcd matrix_from_json(const Json &j);

/// {"outcome": [[mode, count], ...], "p": x, "state": ...}. Mixed outcomes
/// carry "ensemble": [{"counts", "p", "state"}] instead of "state".
Json outcome_to_json(const ConditionalOutcome &o);

/// One object per trace step, for JSON-lines output.
Json trace_step_to_json(const TraceStep &t, std::size_t index);
std::string trace_jsonl(const ProtocolResult &r);

Json result_to_json(const ProtocolResult &r);
Json stats_to_json(const TrialStats &s);
Json recursion_to_json(const RecursionTable &t);

}  // namespace lopt

#endif
