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

#include "lopt/preparation.h"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lopt/gates.h"
#include "lopt/linear_optics.h"
#include "lopt/resource_states.h"

namespace lopt {

namespace {

constexpr double kPi = std::numbers::pi;

std::string pair_name(int x, int y) {
    return std::to_string(x) + "," + std::to_string(y);
}

void splitter(ProtocolBranches &b, int x, int y, double theta) {
    transform(b, [&](const FockState &s) { return apply_element(s, OpticalElement::beam_splitter(x, y, theta)); },
              "splitter " + pair_name(x, y) + " angle " + std::to_string(theta));
}

void had(ProtocolBranches &b, BosonicQubit q) {
    transform(b, [&](const FockState &s) { return hadamard(s, q); }, "hadamard " + pair_name(q.a, q.b));
}

ProtocolBranches csign(const ProtocolBranches &b, int x, int y, GadgetStrategy strategy, BranchPolicy &policy) {
    return then(b, [&](const FockState &s) { return mode_csign(s, x, y, strategy, policy); });
}

void fail_on_code_violation(ProtocolResult &r, const std::vector<int> &counts) {
    for (std::size_t i = 0; i + 1 < counts.size(); i += 2) {
        if (counts[i] + counts[i + 1] != 1) {
            r.fail({FailureKind::HeraldMismatch, "ancilla readout", -1, -1});
            return;
        }
    }
}

}  // namespace

ProtocolBranches prepare_b4_prime_circuit(BranchPolicy &policy, GadgetStrategy strategy) {
    auto b = start(FockState::number_state({0, 1, 0, 1}), mode_csign_probability(strategy));
    b[0].note("prepare", "0101");
    had(b, {0, 1});
    had(b, {2, 3});
    return csign(b, 1, 3, strategy, policy);
}

int tp_csign_count(int n) {
    return 1 + 3 * (n - 1);
}

ProtocolBranches prepare_tp_n(int n, GadgetStrategy strategy, BranchPolicy &policy) {
    if (n < 1) {
        throw std::invalid_argument("resource order must be at least 1");
    }
    std::vector<int> init(2 * n + 2, 0);
    for (int i = 0; i < n; i++) {
        init[i] = 1;
    }
    init[2 * n + 1] = 1;
    const BosonicQubit anc{2 * n, 2 * n + 1};
    auto b = start(FockState::number_state(init), std::pow(mode_csign_probability(strategy), tp_csign_count(n)));
    b[0].note("prepare", occupation_string(make_occupation(init)));
    splitter(b, n - 1, 2 * n - 1, std::atan(std::sqrt(static_cast<double>(n))));
    had(b, anc);
    b = csign(b, 2 * n - 1, anc.a, strategy, policy);
    for (int l = 0; l + 1 < n; l++) {
        const int control = 2 * n - l - 1;
        const BosonicQubit target{n - l - 2, 2 * n - l - 2};
        const double theta = std::atan(std::sqrt(static_cast<double>(n - l - 1)));
        // Rotation by theta on the target only when the control mode is empty:
        // B(theta/2), sign, B(-theta/2), sign.
        splitter(b, target.a, target.b, theta / 2);
        b = csign(b, control, target.a, strategy, policy);
        splitter(b, target.a, target.b, -theta / 2);
        b = csign(b, control, target.a, strategy, policy);
        b = csign(b, target.b, anc.a, strategy, policy);
    }
    had(b, anc);
    return b;
}

ProtocolBranches combine_tp_to_tprime(int n, GadgetStrategy strategy, BranchPolicy &policy, const FockState *tp) {
    FockState source;
    if (tp != nullptr) {
        source = *tp;
    } else {
        auto ideal = BranchPolicy::exhaustive();
        source = best_success(prepare_tp_n(n, GadgetStrategy::ideal(), ideal)).output_state;
    }
    if (source.mode_count() != static_cast<std::size_t>(2 * n + 2)) {
        throw ModeMismatchError("parity-tagged resource must have 2n + 2 modes");
    }
    const BosonicQubit anc_a{2 * n, 2 * n + 1};
    const BosonicQubit anc_b{4 * n + 2, 4 * n + 3};
    auto b = start(tensor(source, source), mode_csign_probability(strategy));
    b[0].note("prepare", "two parity-tagged copies");
    b = csign(b, anc_a.a, anc_b.a, strategy, policy);
    had(b, anc_a);
    had(b, anc_b);
    const std::vector<int> readout{anc_a.a, anc_a.b, anc_b.a, anc_b.b};
    return then(b, [&](const FockState &s) {
        ProtocolBranches out;
        for (auto &o : policy.measure(s, readout)) {
            ProtocolResult r;
            r.probability = o.probability;
            r.output_state = o.post_state();
            r.detections = o.outcome;
            auto counts = o.counts();
            r.note("measure", "ancillas " + occupation_string(make_occupation(counts)), o.probability);
            fail_on_code_violation(r, counts);
            if (r.succeeded) {
                for (int half = 0; half < 2; half++) {
                    if (counts[2 * half] != 1) {
                        continue;
                    }
                    for (int m = 2 * n * half + n; m < 2 * n * (half + 1); m++) {
                        r.output_state = apply_phase(r.output_state, m, kPi);
                        r.corrections.push_back({m, kPi});
                    }
                    r.note("correction", "pi phases on last modes of half " + std::to_string(half));
                }
            }
            out.push_back(std::move(r));
        }
        return out;
    });
}

ProtocolBranches prepare_pn_prime(int n, GadgetStrategy strategy, BranchPolicy &policy) {
    auto tn = make_resource(ResourceKind::tn(n)).state;
    const BosonicQubit anc{4 * n, 4 * n + 1};
    auto b = start(tensor(tensor(tn, tn), FockState::number_state({0, 1})),
                   std::pow(mode_csign_probability(strategy), 2 * n));
    b[0].note("prepare", "two order-n resources and an ancilla");
    had(b, anc);
    for (int half = 0; half < 2; half++) {
        for (int m = 2 * n * half + n; m < 2 * n * (half + 1); m++) {
            b = csign(b, m, anc.a, strategy, policy);
        }
    }
    had(b, anc);
    const std::vector<int> readout{anc.a, anc.b};
    return then(b, [&](const FockState &s) {
        ProtocolBranches out;
        for (auto &o : policy.measure(s, readout)) {
            ProtocolResult r;
            r.probability = o.probability;
            r.output_state = o.post_state();
            r.detections = o.outcome;
            auto counts = o.counts();
            r.note("measure", "ancilla " + occupation_string(make_occupation(counts)), o.probability);
            fail_on_code_violation(r, counts);
            if (r.succeeded) {
                r.parity = counts[0];
            }
            out.push_back(std::move(r));
        }
        return out;
    });
}

}  // namespace lopt
