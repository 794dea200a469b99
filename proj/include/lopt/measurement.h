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

#ifndef LOPT_MEASUREMENT_H
#define LOPT_MEASUREMENT_H

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "lopt/fock_state.h"

namespace lopt {

struct DetectorModel {
    enum class Kind {
        Counter,  // exact photon number
        Bucket,   // no click vs. one or more
        Fanout,   // 1/sqrt(N) fan-out onto N bucket detectors, reports clicks
    };
    Kind kind = Kind::Counter;
    int fanout = 1;

    static DetectorModel counter() {
        return {Kind::Counter, 1};
    }
    static DetectorModel bucket() {
        return {Kind::Bucket, 1};
    }
    static DetectorModel fanout_counter(int n);
};

/// One exact photon-count pattern inside a coarse-grained outcome.
struct CountBranch {
    Occupation counts;  // on the measured modes, in measurement order
    double probability = 0;
    FockState state;  // normalized, measured modes removed
};

/// A measurement branch. Counter outcomes are always pure; bucket and fan-out
/// outcomes may merge several exact count patterns, in which case the
/// conditional state is the mixture held in `ensemble`.
struct ConditionalOutcome {
    std::vector<std::pair<int, int>> outcome;  // (mode, reported count); a bucket click reports 1
    double probability = 0;
    std::vector<CountBranch> ensemble;  // weights sum to `probability`

    bool is_pure() const;
    /// The conditional state. Throws std::logic_error for a mixed outcome.
    const FockState &post_state() const;
    /// Probability-weighted overlap of the conditional state with `target`.
    double fidelity_with(const FockState &target) const;
    /// Reported counts in measurement order.
    std::vector<int> counts() const;
};

/// Every outcome of detecting `modes`, with measured modes removed from the
/// conditional states. Probabilities are relative to the input norm.
std::vector<ConditionalOutcome> measure_modes(const FockState &s, std::span<const int> modes, DetectorModel model);

/// Counter projection onto one pattern. Returns nullopt when the pattern has
/// zero probability; protocols branch on that rather than catching.
std::optional<ConditionalOutcome> postselect(const FockState &s, std::span<const int> modes, std::span<const int> counts);

struct FanoutResult {
    std::vector<ConditionalOutcome> outcomes;  // keyed by the number of detectors that fired
    double misdetect_probability = 0;          // some fan-out mode held two or more bosons
};

/// Approximate photon counting on `mode`: the mode is spread over N modes by
/// the N-point Fourier transform (first column 1/sqrt(N)) and each is read by a
/// bucket detector.
FanoutResult fanout_count(const FockState &s, int mode, int n);

/// 1 - (N)_k / N^k, the probability that k bosons spread uniformly over N modes
/// are not all in distinct modes.
double fanout_misdetect_exact(int k, int n);

/// Draws one outcome with its exact probability.
ConditionalOutcome sample_outcome(const FockState &s, std::span<const int> modes, DetectorModel model, std::mt19937_64 &rng);
ConditionalOutcome sample_outcome(const FockState &s, std::span<const int> modes, DetectorModel model, std::uint64_t seed);

/// Picks an index from `outcomes` weighted by probability.
std::size_t sample_index(const std::vector<ConditionalOutcome> &outcomes, std::mt19937_64 &rng);

}  // namespace lopt

#endif
