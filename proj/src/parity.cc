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

#include "lopt/parity.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lopt/linear_optics.h"
#include "lopt/resource_states.h"
#include "lopt/teleportation.h"

namespace lopt {

namespace {

constexpr double kPi = std::numbers::pi;

FockState balanced(const FockState &s, int x, int y) {
    return apply_element(s, OpticalElement::beam_splitter(x, y, kBalancedAngle));
}

}  // namespace

ProtocolBranches parity_measure(const FockState &host, int x, int y, int n, BranchPolicy &policy,
                                const FockState *resource, bool odd_variant) {
    const PairResource kind = odd_variant ? PairResource::ParityOdd : PairResource::Parity;
    auto out = resource != nullptr
                   ? teleport_mode_pair(host, x, y, n, kind, *resource, policy)
                   : teleport_mode_pair(host, x, y, n, kind,
                                        make_resource(ResourceKind::pn_prime(n, odd_variant)).state, policy);
    double weight[2] = {0, 0};
    for (const auto &[occ, amp] : host.terms()) {
        weight[(occ[x] + occ[y]) % 2] += std::norm(amp);
    }
    const double total = weight[0] + weight[1];
    const auto strategy = GadgetStrategy::teleported(n);
    const double p = (weight[0] * parity_success_probability(strategy, 0, odd_variant) +
                      weight[1] * parity_success_probability(strategy, 1, odd_variant)) /
                     total;
    for (auto &b : out) {
        b.success_probability = p;
    }
    return out;
}

ProtocolBranches ideal_parity_measure(const FockState &host, int x, int y, BranchPolicy &policy) {
    FockState sector[2] = {FockState(host.mode_count()), FockState(host.mode_count())};
    for (const auto &[occ, amp] : host.terms()) {
        sector[(occ[x] + occ[y]) % 2].add(occ, amp);
    }
    const double total = host.norm_squared();
    ProtocolBranches out;
    std::vector<double> weights;
    for (int p = 0; p < 2; p++) {
        double w = sector[p].norm_squared() / total;
        if (w <= kPruneTolerance) {
            continue;
        }
        ProtocolResult r;
        r.success_probability = 1;
        r.probability = w;
        r.parity = p;
        r.output_state = sector[p].normalized();
        r.note("measure", std::string("parity ") + (p == 0 ? "even" : "odd") + " on modes " + std::to_string(x) +
                              "," + std::to_string(y), w);
        out.push_back(std::move(r));
        weights.push_back(w);
    }
    if (policy.is_sampled() && out.size() > 1) {
        // Reuse the sampler by measuring a stand-in mode that holds the parity.
        FockState tag(1);
        tag.add(make_occupation({0}), std::sqrt(weights[0]));
        tag.add(make_occupation({1}), std::sqrt(weights[1]));
        const int only[1] = {0};
        auto pick = policy.measure(tag, only);
        return {out[pick[0].counts()[0]]};
    }
    return out;
}

double parity_success_probability(GadgetStrategy strategy, int sector, bool odd_variant) {
    if (strategy.kind != GadgetStrategy::Kind::Teleported) {
        return 1;
    }
    const int n = strategy.n;
    const int want = odd_variant ? 1 : 0;
    // Representative input (0, sector): success needs j in [1, n] and
    // i in [1 - sector, n - sector].
    int terms = 0;
    int good = 0;
    for (int j = 0; j <= n; j++) {
        for (int i = 0; i <= n; i++) {
            if ((i + j) % 2 != want) {
                continue;
            }
            terms++;
            if (j >= 1 && i >= 1 - sector && i <= n - sector) {
                good++;
            }
        }
    }
    return static_cast<double>(good) / terms;
}

ProtocolBranches measure_parity(const FockState &host, int x, int y, GadgetStrategy strategy, BranchPolicy &policy) {
    switch (strategy.kind) {
        case GadgetStrategy::Kind::Ideal:
            return ideal_parity_measure(host, x, y, policy);
        case GadgetStrategy::Kind::Teleported:
            return parity_measure(host, x, y, strategy.n, policy);
        case GadgetStrategy::Kind::NonlinearSign:
            break;
    }
    throw std::invalid_argument("parity measurement supports the ideal and teleported strategies only");
}

ProtocolBranches teleport_with_E(const FockState &host, BosonicQubit q, GadgetStrategy parity, BranchPolicy &policy) {
    if (!is_coherent(host, q)) {
        throw IncoherentQubitError("teleport input qubit leaves the code space");
    }
    const int m = static_cast<int>(host.mode_count());
    const BosonicQubit out_q{m + 2, m + 3};
    auto b = start(tensor(host, make_resource(ResourceKind::e()).state),
                   0.5 * (parity_success_probability(parity, 0) + parity_success_probability(parity, 1)));
    b[0].note("prepare", "entangled pair on modes " + std::to_string(m) + ".." + std::to_string(m + 3));
    b = then(b, [&](const FockState &s) { return measure_parity(s, q.b, m, parity, policy); });
    std::vector<int> readout{q.a, q.b, m, m + 1};
    std::vector<int> sorted = readout;
    std::sort(sorted.begin(), sorted.end());
    return then(b, [&](const ProtocolResult &parent) {
        const FockState w = balanced(balanced(parent.output_state, q.a, q.b), m, m + 1);
        const bool exchanged = parent.parity.value_or(0) == 1;
        ProtocolBranches out;
        for (auto &o : policy.measure(w, readout)) {
            ProtocolResult r;
            r.probability = o.probability;
            r.detections = o.outcome;
            auto c = o.counts();
            r.note("element", "balanced splitters on the input qubit and the near pair");
            r.note("measure", "pattern " + occupation_string(make_occupation(c)), o.probability);
            r.output_state = insert_vacuum_modes(o.post_state(), sorted);
            if (c[0] + c[1] != 1 || c[2] + c[3] != 1) {
                r.fail({FailureKind::HeraldMismatch, "sign readout", -1, -1});
                out.push_back(std::move(r));
                continue;
            }
            if (exchanged) {
                r.output_state = swap_modes(r.output_state, out_q.a, out_q.b);
                r.note("correction", "swap modes " + std::to_string(out_q.a) + "," + std::to_string(out_q.b));
            }
            if (c[0] == c[2]) {
                r.output_state = apply_phase(r.output_state, out_q.a, kPi);
                r.corrections.push_back({q.a, kPi});
                r.note("correction", "pi phase on mode " + std::to_string(out_q.a));
            }
            r.output_state = swap_modes(swap_modes(r.output_state, q.a, out_q.a), q.b, out_q.b);
            const int released[4] = {m, m + 1, m + 2, m + 3};
            r.output_state = drop_definite_modes(r.output_state, released, &r.leftover);
            out.push_back(std::move(r));
        }
        return out;
    });
}

ProtocolBranches distribute_entanglement(GadgetStrategy parity, BranchPolicy &policy) {
    FockState s(4);
    s.add(make_occupation({0, 0, 1, 1}), 0.5);
    s.add(make_occupation({0, 1, 1, 0}), 0.5);
    s.add(make_occupation({1, 0, 0, 1}), -0.5);
    s.add(make_occupation({1, 1, 0, 0}), -0.5);
    auto b = start(s, 0.5 * parity_success_probability(parity, 1));
    b[0].note("prepare", "two crossed dual-rail pairs");
    b = then(b, [&](const FockState &st) { return measure_parity(st, 0, 1, parity, policy); });
    for (auto &r : b) {
        if (r.succeeded && r.parity && *r.parity == 0) {
            r.fail({FailureKind::HeraldMismatch, "even parity rejected", -1, -1});
        }
    }
    return b;
}

}  // namespace lopt
