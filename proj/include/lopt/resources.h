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

#ifndef LOPT_RESOURCES_H
#define LOPT_RESOURCES_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lopt/registry.h"

namespace lopt {

/// 1/p. Throws std::invalid_argument unless 0 < p <= 1.
double expected_trials(double p);

struct CostModel {
    int elements = 0;        // phase shifters and beam splitters
    int detectors = 0;
    int single_photons = 0;  // fresh photons consumed, including resources
    int nondeterministic_gates = 0;
    double gate_success = 1;  // per nondeterministic gate
    double success = 1;       // whole protocol

    double expected_attempts() const {
        return expected_trials(success);
    }
};

/// Operation counts for one attempt at the protocol.
CostModel cost_model(const ProtocolSpec &spec);

struct FitResult {
    double slope = 0;
    double intercept = 0;
    double residual = 0;  // sum of squared errors
};

struct RecursionRow {
    int n = 0;
    double log_s = 0;      // natural log of the recursion bound
    double log_naive = 0;  // natural log of 4^{alpha n}
};

struct RecursionTable {
    double c1 = 1, c2 = 1, base = 1, alpha = 1;
    std::vector<RecursionRow> rows;  // n = 1 .. n_max
    FitResult sqrt_log_fit;  // log S ~ a sqrt(n) log n + b
    FitResult linear_fit;    // log S ~ a n + b
    int crossover = -1;      // first n from which the bound stays below the naive model
    bool per_n_decreasing = false;  // log S(n) / n decreasing over the upper half

    bool subexponential() const {
        return sqrt_log_fit.residual < linear_fit.residual && per_n_decreasing;
    }
};

/// S(1) = base, S(n) = (1 + c1/sqrt n)(S(n-1) + c2 S(m)) with
/// m = clamp(ceil(sqrt n), 1, n - 1), evaluated in the log domain.
RecursionTable s_recursion_table(int n_max, double c1 = 1, double c2 = 1, double base = 1, double alpha = 1);

struct TrialStats {
    std::int64_t trials = 0;
    std::int64_t successes = 0;
    double rate = 0;
    double half_width95 = 0;
    std::optional<double> analytic;

    /// |rate - analytic| <= 3 sqrt(p (1 - p) / trials); true when no analytic value.
    bool within_three_sigma() const;
};

/// Seed of trial `index` under run seed `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// Runs `trials` sampled executions. Trial i uses trial_seed(seed, i), so the
/// result does not depend on `threads`.
TrialStats monte_carlo(const ProtocolSpec &spec, std::int64_t trials, std::uint64_t seed, int threads = 1);

std::string to_csv(const RecursionTable &table);

}  // namespace lopt

#endif
