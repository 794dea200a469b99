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

#ifndef LOPT_PARITY_H
#define LOPT_PARITY_H

#include "lopt/fock_state.h"
#include "lopt/gates.h"
#include "lopt/protocol.h"

namespace lopt {

/// Nondestructive parity of n_x + n_y (each mode holding at most one photon)
/// by teleporting both modes through the parity resource. `parity` is set on
/// successful branches. When `resource` is null the closed form is used;
/// `odd_variant` says which variant `resource` is.
ProtocolBranches parity_measure(const FockState &host, int x, int y, int n, BranchPolicy &policy,
                                const FockState *resource = nullptr, bool odd_variant = false);

/// Projective parity measurement with no failure branch.
ProtocolBranches ideal_parity_measure(const FockState &host, int x, int y, BranchPolicy &policy);

/// Ideal or teleported parity. Nonlinear sign strategies are rejected.
ProtocolBranches measure_parity(const FockState &host, int x, int y, GadgetStrategy strategy, BranchPolicy &policy);

/// Success probability of the parity gadget on an input of parity `sector`.
/// The teleported gadget succeeds for both Fourier counts in [1, n], which
/// happens for a sector-dependent share of the resource's terms.
double parity_success_probability(GadgetStrategy strategy, int sector, bool odd_variant = false);

/// Teleports qubit `q` through (|0110> - |1001>)/sqrt(2) using a parity
/// measurement to pick the Bell-pair class and two balanced splitters to
/// read the sign. The output returns to `q`'s modes.
ProtocolBranches teleport_with_E(const FockState &host, BosonicQubit q, GadgetStrategy parity,
                                 BranchPolicy &policy);

/// Parity measurement on modes 0, 1 of
/// (|01>_{0,2} - |10>_{0,2})(|01>_{1,3} + |10>_{1,3}) / 2, accepting odd.
ProtocolBranches distribute_entanglement(GadgetStrategy parity, BranchPolicy &policy);

}  // namespace lopt

#endif
