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

#ifndef LOPT_TELEPORTATION_H
#define LOPT_TELEPORTATION_H

#include <span>
#include <vector>

#include "lopt/fock_state.h"
#include "lopt/gates.h"
#include "lopt/protocol.h"

namespace lopt {

/// One outcome of the partial Bell measurement on two modes.
struct Bm1Outcome {
    int parity = 0;  // total count mod 2
    int sign = 0;    // +1 or -1 for a single detected photon, 0 otherwise
    std::vector<int> counts;
    double probability = 0;
    FockState post_state;  // measured modes removed
};

/// Balanced splitter on (m1, m2) followed by two counters.
std::vector<Bm1Outcome> bm1_measure(const FockState &s, int m1, int m2, BranchPolicy &policy);

/// Teleports the content of `input_mode` through a Bell pair using the
/// partial Bell measurement. Success (odd parity) has probability 1/2.
/// The teleported mode is returned at `input_mode`.
ProtocolBranches teleport_bm1(const FockState &host, int input_mode, BranchPolicy &policy);

/// Phase applied to the teleported |1> component after the Fourier
/// measurement recorded `pattern` (counts on Fourier ports 0..n).
double fourier_correction_angle(std::span<const int> pattern);

/// Teleports `input_mode` (holding 0 or 1 photons) through the order-n
/// resource. Fails with probability 1/(n + 1), projecting the input onto
/// |0> or |1>. The output (or the projected vacuum) stays at `input_mode`;
/// released resource counts are recorded in `leftover`.
ProtocolBranches teleport_tn(const FockState &host, int input_mode, int n, BranchPolicy &policy);

/// Controlled sign between modes x and y by teleporting both through the
/// 4n-mode signed resource. If `resource` is null the closed form is used.
ProtocolBranches teleported_mode_csign(const FockState &host, int x, int y, int n, BranchPolicy &policy,
                                       const FockState *resource = nullptr);

ProtocolBranches csign_teleported(const FockState &host, BosonicQubit q1, BosonicQubit q2, int n,
                                  BranchPolicy &policy, const FockState *resource = nullptr);

enum class PairResource { SignedCsign, Parity, ParityOdd };

/// Shared two-mode teleportation behind the teleported c-sign and the
/// parity measurement. Stops after a failed first measurement.
ProtocolBranches teleport_mode_pair(const FockState &host, int x, int y, int n, PairResource kind,
                                    const FockState &resource, BranchPolicy &policy);

}  // namespace lopt

#endif
