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

#include "lopt/protocol.h"

#include <algorithm>
#include <stdexcept>

namespace lopt {

void ProtocolResult::note(std::string kind, std::string detail, double branch_probability) {
    double cumulative = trace.empty() ? 1.0 : trace.back().cumulative_probability;
    trace.push_back({std::move(kind), std::move(detail), branch_probability, cumulative * branch_probability});
}

void ProtocolResult::fail(FailureInfo info) {
    succeeded = false;
    failure = std::move(info);
}

double success_probability(const ProtocolBranches &branches) {
    double p = 0;
    for (const auto &b : branches) {
        if (b.succeeded) {
            p += b.probability;
        }
    }
    return p;
}

double total_probability(const ProtocolBranches &branches) {
    double p = 0;
    for (const auto &b : branches) {
        p += b.probability;
    }
    return p;
}

const ProtocolResult &best_success(const ProtocolBranches &branches) {
    const ProtocolResult *best = nullptr;
    for (const auto &b : branches) {
        if (b.succeeded && (best == nullptr || b.probability > best->probability)) {
            best = &b;
        }
    }
    if (best == nullptr) {
        throw std::runtime_error("protocol has no successful branch");
    }
    return *best;
}

namespace {

bool same_failure(const ProtocolResult &a, const ProtocolResult &b) {
    if (!a.failure || !b.failure) {
        return !a.failure && !b.failure;
    }
    return a.failure->kind == b.failure->kind && a.failure->stage == b.failure->stage &&
           a.failure->mode == b.failure->mode && a.failure->projected_value == b.failure->projected_value;
}

}  // namespace

ProtocolBranches coalesce(ProtocolBranches branches, double tol) {
    ProtocolBranches out;
    for (auto &b : branches) {
        ProtocolResult *match = nullptr;
        for (auto &o : out) {
            if (o.succeeded != b.succeeded || o.parity != b.parity) {
                continue;
            }
            if (b.succeeded) {
                if (o.output_state.mode_count() == b.output_state.mode_count() &&
                    fidelity(o.output_state, b.output_state) > 1 - tol) {
                    match = &o;
                    break;
                }
            } else if (same_failure(o, b)) {
                match = &o;
                break;
            }
        }
        if (match == nullptr) {
            out.push_back(std::move(b));
        } else {
            double p = match->probability + b.probability;
            if (b.probability > match->probability) {
                *match = std::move(b);
            }
            match->probability = p;
        }
    }
    return out;
}

BranchPolicy BranchPolicy::exhaustive() {
    return BranchPolicy();
}

BranchPolicy BranchPolicy::sampled(std::uint64_t seed) {
    BranchPolicy p;
    p.rng_ = std::make_shared<std::mt19937_64>(seed);
    return p;
}

std::vector<ConditionalOutcome> BranchPolicy::measure(
    const FockState &s, std::span<const int> modes, DetectorModel model) {
    auto outcomes = measure_modes(s, modes, model);
    if (!rng_) {
        return outcomes;
    }
    std::size_t pick = sample_index(outcomes, *rng_);
    return {std::move(outcomes[pick])};
}

std::string GadgetStrategy::name() const {
    switch (kind) {
        case Kind::Ideal:
            return "ideal";
        case Kind::NonlinearSign:
            return "ns";
        case Kind::Teleported:
            return "teleported";
    }
    return "?";
}

GadgetStrategy parse_strategy(const std::string &name, int n) {
    if (name == "ideal") {
        return GadgetStrategy::ideal();
    }
    if (name == "ns") {
        return GadgetStrategy::nonlinear_sign();
    }
    if (name == "teleported") {
        if (n < 1) {
            throw std::invalid_argument("teleported strategy needs n >= 1");
        }
        return GadgetStrategy::teleported(n);
    }
    throw std::invalid_argument("unknown strategy '" + name + "' (expected ideal, ns or teleported)");
}

ProtocolBranches start(FockState s, double success_probability) {
    ProtocolResult r;
    r.output_state = std::move(s);
    r.success_probability = success_probability;
    return {std::move(r)};
}

}  // namespace lopt
