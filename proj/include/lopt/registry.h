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

#ifndef LOPT_REGISTRY_H
#define LOPT_REGISTRY_H

#include <optional>
#include <string>
#include <vector>

#include "lopt/fock_state.h"
#include "lopt/protocol.h"

namespace lopt {

enum class ProtocolKind {
    Ns1,         // nonlinear sign on one mode
    Csign,       // two-qubit controlled sign, realized per strategy
    B4Prime,     // circuit preparation of the four-mode resource
    TeleportBm1, // Bell-pair teleportation with the partial Bell measurement
    Teleport,    // order-n Fourier teleportation
    Tp,          // parity-tagged resource preparation
    TPrime,      // signed resource from two parity-tagged copies
    PnPrime,     // parity resource preparation
    Parity,      // nondestructive parity measurement
    TeleportE,   // qubit teleportation through the crossed Bell pair
    Distribute,  // entanglement distribution
};

struct ProtocolSpec {
    ProtocolKind kind = ProtocolKind::Ns1;
    int n = 1;
    GadgetStrategy strategy;
    std::vector<Complex> input;  // empty: the protocol's default input
};

std::vector<std::string> protocol_names();
ProtocolKind parse_protocol(const std::string &name);
std::string protocol_name(ProtocolKind kind);

/// Strategy used when none is given: teleported for c-sign, nonlinear sign
/// for the four-mode resource circuit, ideal elsewhere.
GadgetStrategy default_strategy(ProtocolKind kind, int n);

/// The host state the protocol starts from. Throws std::invalid_argument if
/// `spec.input` has the wrong length or is all zeros; other inputs are
/// normalized.
FockState protocol_input(const ProtocolSpec &spec);

/// Runs the protocol under `policy`.
ProtocolBranches run_protocol(const ProtocolSpec &spec, BranchPolicy &policy);

/// Closed-form success probability, when the protocol has one.
std::optional<double> analytic_success(const ProtocolSpec &spec);

}  // namespace lopt

#endif
