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

#include "lopt/registry.h"

#include <cmath>
#include <stdexcept>

#include "lopt/gates.h"
#include "lopt/parity.h"
#include "lopt/preparation.h"
#include "lopt/teleportation.h"

namespace lopt {

namespace {

struct Entry {
    ProtocolKind kind;
    const char *name;
    int input_size;  // amplitudes expected in --input; 0 if none
};

constexpr Entry kEntries[] = {
    {ProtocolKind::Ns1, "ns1", 3},
    {ProtocolKind::Csign, "csign", 4},
    {ProtocolKind::B4Prime, "b4prime", 0},
    {ProtocolKind::TeleportBm1, "bm1", 2},
    {ProtocolKind::Teleport, "teleport", 2},
    {ProtocolKind::Tp, "tp", 0},
    {ProtocolKind::TPrime, "tprime", 0},
    {ProtocolKind::PnPrime, "pnprime", 0},
    {ProtocolKind::Parity, "parity", 4},
    {ProtocolKind::TeleportE, "teleport_e", 2},
    {ProtocolKind::Distribute, "distribute", 0},
};

const Entry &entry(ProtocolKind kind) {
    for (const auto &e : kEntries) {
        if (e.kind == kind) {
            return e;
        }
    }
    throw std::invalid_argument("unknown protocol kind");
}

std::vector<Complex> normalized(std::vector<Complex> amps) {
    double norm = 0;
    for (auto a : amps) {
        norm += std::norm(a);
    }
    if (norm == 0 || !std::isfinite(norm)) {
        throw std::invalid_argument("input amplitudes must not all vanish");
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return amps;
}

std::vector<Complex> default_amplitudes(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::Ns1:
            return {1, 1, 1};
        case ProtocolKind::Csign:
            return {1, 1, 1, 1};
        case ProtocolKind::Parity:
            return {0, 1, 1, 0};
        case ProtocolKind::TeleportBm1:
        case ProtocolKind::Teleport:
        case ProtocolKind::TeleportE:
            return {0.6, 0.8};
        default:
            return {};
    }
}

}  // namespace

std::vector<std::string> protocol_names() {
    std::vector<std::string> out;
    for (const auto &e : kEntries) {
        out.emplace_back(e.name);
    }
    return out;
}

ProtocolKind parse_protocol(const std::string &name) {
    for (const auto &e : kEntries) {
        if (name == e.name) {
            return e.kind;
        }
    }
    throw std::invalid_argument("unknown protocol '" + name + "'");
}

std::string protocol_name(ProtocolKind kind) {
    return entry(kind).name;
}

GadgetStrategy default_strategy(ProtocolKind kind, int n) {
    if (kind == ProtocolKind::Csign) {
        return GadgetStrategy::teleported(n);
    }
    if (kind == ProtocolKind::B4Prime) {
        return GadgetStrategy::nonlinear_sign();
    }
    return GadgetStrategy::ideal();
}

FockState protocol_input(const ProtocolSpec &spec) {
    const Entry &e = entry(spec.kind);
    std::vector<Complex> amps = spec.input.empty() ? default_amplitudes(spec.kind) : spec.input;
    if (e.input_size == 0) {
        if (!spec.input.empty()) {
            throw std::invalid_argument(std::string("protocol '") + e.name + "' takes no input");
        }
        return FockState(0);
    }
    if (static_cast<int>(amps.size()) != e.input_size) {
        throw std::invalid_argument(std::string("protocol '") + e.name + "' expects " +
                                    std::to_string(e.input_size) + " input amplitudes");
    }
    amps = normalized(std::move(amps));
    switch (spec.kind) {
        case ProtocolKind::Ns1: {
            FockState s(1);
            for (int k = 0; k < 3; k++) {
                s.add(make_occupation({k}), amps[k]);
            }
            return s.pruned(0.0);
        }
        case ProtocolKind::Parity: {
            // Amplitudes of |00>, |01>, |10>, |11> on the two measured modes.
            FockState s(2);
            const int occ[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
            for (int i = 0; i < 4; i++) {
                s.add(make_occupation(occ[i]), amps[i]);
            }
            return s.pruned(0.0);
        }
        default:
            return encode_qubits(amps);
    }
}

ProtocolBranches run_protocol(const ProtocolSpec &spec, BranchPolicy &policy) {
    if (spec.n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    const FockState in = protocol_input(spec);
    switch (spec.kind) {
        case ProtocolKind::Ns1:
            return apply_ns1(in, 0, policy);
        case ProtocolKind::Csign:
            if (spec.strategy.kind == GadgetStrategy::Kind::NonlinearSign) {
                return csign_via_ns(in, {0, 1}, {2, 3}, policy);
            }
            if (spec.strategy.kind == GadgetStrategy::Kind::Teleported) {
                return csign_teleported(in, {0, 1}, {2, 3}, spec.strategy.n, policy);
            }
            return mode_csign(in, 0, 2, spec.strategy, policy);
        case ProtocolKind::B4Prime:
            return prepare_b4_prime_circuit(policy, spec.strategy);
        case ProtocolKind::TeleportBm1:
            return teleport_bm1(in, 0, policy);
        case ProtocolKind::Teleport:
            return teleport_tn(in, 0, spec.n, policy);
        case ProtocolKind::Tp:
            return prepare_tp_n(spec.n, spec.strategy, policy);
        case ProtocolKind::TPrime:
            return combine_tp_to_tprime(spec.n, spec.strategy, policy);
        case ProtocolKind::PnPrime:
            return prepare_pn_prime(spec.n, spec.strategy, policy);
        case ProtocolKind::Parity:
            return parity_measure(in, 0, 1, spec.n, policy);
        case ProtocolKind::TeleportE:
            return teleport_with_E(in, {0, 1}, spec.strategy, policy);
        case ProtocolKind::Distribute:
            return distribute_entanglement(spec.strategy, policy);
    }
    throw std::invalid_argument("unknown protocol kind");
}

std::optional<double> analytic_success(const ProtocolSpec &spec) {
    const double gate = mode_csign_probability(spec.strategy);
    switch (spec.kind) {
        case ProtocolKind::Ns1:
            return 0.25;
        case ProtocolKind::Csign:
            return spec.strategy.kind == GadgetStrategy::Kind::NonlinearSign ? 1.0 / 16 : gate;
        case ProtocolKind::B4Prime:
            return gate;
        case ProtocolKind::TeleportBm1:
            return 0.5;
        case ProtocolKind::Teleport:
            return spec.n / (spec.n + 1.0);
        case ProtocolKind::Tp:
            return std::pow(gate, tp_csign_count(spec.n));
        case ProtocolKind::TPrime:
            return gate;
        case ProtocolKind::PnPrime:
            return std::pow(gate, 2 * spec.n);
        case ProtocolKind::Parity: {
            const FockState in = protocol_input(spec);
            double w[2] = {0, 0};
            for (const auto &[occ, amp] : in.terms()) {
                w[(occ[0] + occ[1]) % 2] += std::norm(amp);
            }
            auto t = GadgetStrategy::teleported(spec.n);
            return w[0] * parity_success_probability(t, 0) + w[1] * parity_success_probability(t, 1);
        }
        case ProtocolKind::TeleportE:
            return 0.5 * (parity_success_probability(spec.strategy, 0) +
                          parity_success_probability(spec.strategy, 1));
        case ProtocolKind::Distribute:
            return 0.5 * parity_success_probability(spec.strategy, 1);
    }
    return std::nullopt;
}

}  // namespace lopt
