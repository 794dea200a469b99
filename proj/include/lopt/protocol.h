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

#ifndef LOPT_PROTOCOL_H
#define LOPT_PROTOCOL_H

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lopt/fock_state.h"
#include "lopt/measurement.h"

namespace lopt {

enum class FailureKind {
    /// Detectors reported a pattern other than the accepted one.
    HeraldMismatch,
    /// A teleportation measurement projected its input onto |0> or |1>, and
    /// the detector record says which.
    BasisProjection,
};

struct FailureInfo {
    FailureKind kind = FailureKind::HeraldMismatch;
    std::string stage;
    int mode = -1;             // host mode that was projected (BasisProjection)
    int projected_value = -1;  // 0 or 1 (BasisProjection)
};

struct PhaseCorrection {
    int mode = 0;
    double angle = 0;
};

/// One line of a protocol trace.
struct TraceStep {
    std::string kind;  // "element", "measure", "correction", "prepare", "discard"
    std::string detail;
    double branch_probability = 1;
    double cumulative_probability = 1;
};

/// One classical branch of a protocol run.
struct ProtocolResult {
    bool succeeded = true;
    std::optional<FailureInfo> failure;
    std::vector<PhaseCorrection> corrections;
    FockState output_state;
    /// Probability of this branch.
    double probability = 1;
    /// Closed-form success probability of the whole protocol.
    double success_probability = 0;
    std::optional<int> parity;
    /// Counts left on resource modes that were released after the run.
    Occupation leftover;
    std::vector<std::pair<int, int>> detections;  // (mode, count), in the order read out
    std::vector<TraceStep> trace;

    void note(std::string kind, std::string detail, double branch_probability = 1);
    void fail(FailureInfo info);
};

using ProtocolBranches = std::vector<ProtocolResult>;

/// Total probability of the succeeded branches.
double success_probability(const ProtocolBranches &branches);
double total_probability(const ProtocolBranches &branches);

/// The succeeded branch with the highest probability. Throws if none.
const ProtocolResult &best_success(const ProtocolBranches &branches);

/// Merges succeeded branches whose output states coincide (fidelity within
/// `tol` of 1), and failed branches with the same failure record, summing
/// probabilities. Keeps the trace of the most probable member.
ProtocolBranches coalesce(ProtocolBranches branches, double tol = 1e-10);

/// Decides which detector outcomes a protocol explores: all of them
/// (exhaustive), or one drawn at random per measurement (sampled).
class BranchPolicy {
   public:
    static BranchPolicy exhaustive();
    static BranchPolicy sampled(std::uint64_t seed);

    bool is_sampled() const {
        return rng_ != nullptr;
    }
    std::vector<ConditionalOutcome> measure(
        const FockState &s, std::span<const int> modes, DetectorModel model = DetectorModel::counter());

   private:
    std::shared_ptr<std::mt19937_64> rng_;
};

/// How a protocol realizes an internal controlled-sign or parity gadget.
struct GadgetStrategy {
    enum class Kind {
        Ideal,          // exact unitary / projector, probability 1
        NonlinearSign,  // two post-selected NS gates, probability 1/16
        Teleported,     // teleportation through a prepared resource, order n
    };
    Kind kind = Kind::Ideal;
    int n = 1;

    static GadgetStrategy ideal() {
        return {Kind::Ideal, 1};
    }
    static GadgetStrategy nonlinear_sign() {
        return {Kind::NonlinearSign, 1};
    }
    static GadgetStrategy teleported(int n) {
        return {Kind::Teleported, n};
    }
    std::string name() const;
};

/// Parses "ideal", "ns", "teleported" (order taken from `n`).
GadgetStrategy parse_strategy(const std::string &name, int n);

/// Runs `step` on every succeeded branch; failed branches pass through.
/// `step` takes the branch's output state, or the whole branch. Child
/// probabilities returned by `step` are conditional and get multiplied by the
/// parent's; parent traces, detections and corrections are kept.
template <typename Step>
ProtocolBranches then(const ProtocolBranches &parents, Step step) {
    ProtocolBranches out;
    for (const auto &parent : parents) {
        if (!parent.succeeded) {
            out.push_back(parent);
            continue;
        }
        ProtocolBranches children;
        if constexpr (std::is_invocable_v<Step, const ProtocolResult &>) {
            children = step(parent);
        } else {
            children = step(parent.output_state);
        }
        for (auto &child : children) {
            ProtocolResult merged = parent;
            merged.succeeded = child.succeeded;
            merged.failure = child.failure;
            merged.output_state = std::move(child.output_state);
            merged.probability = parent.probability * child.probability;
            if (child.parity) {
                merged.parity = child.parity;
            }
            merged.corrections.insert(merged.corrections.end(), child.corrections.begin(), child.corrections.end());
            merged.detections.insert(merged.detections.end(), child.detections.begin(), child.detections.end());
            for (auto t : child.trace) {
                t.cumulative_probability = parent.probability * t.cumulative_probability;
                merged.trace.push_back(std::move(t));
            }
            out.push_back(std::move(merged));
        }
    }
    return out;
}

/// Single succeeded branch holding `s`.
ProtocolBranches start(FockState s, double success_probability);

/// Applies a deterministic state map to every succeeded branch.
template <typename Fn>
void transform(ProtocolBranches &branches, Fn fn, const std::string &detail) {
    for (auto &b : branches) {
        if (b.succeeded) {
            b.output_state = fn(b.output_state);
            b.note("element", detail);
        }
    }
}

}  // namespace lopt

#endif
