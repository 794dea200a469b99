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

#ifndef LOPT_PREPARATION_H
#define LOPT_PREPARATION_H

#include "lopt/fock_state.h"
#include "lopt/protocol.h"

namespace lopt {

/// |01>|01>, a Hadamard on each qubit, then a controlled sign on modes 1
/// and 3. The default strategy uses nonlinear sign gates (probability 1/16).
ProtocolBranches prepare_b4_prime_circuit(BranchPolicy &policy,
                                          GadgetStrategy strategy = GadgetStrategy::nonlinear_sign());

/// Number of controlled-sign gates used by prepare_tp_n.
int tp_csign_count(int n);

/// Builds the order-n teleportation resource with a parity ancilla on modes
/// 2n, 2n + 1. Qubit l (0-based) lives on modes (l, n + l). Every internal
/// controlled sign runs through `strategy`.
ProtocolBranches prepare_tp_n(int n, GadgetStrategy strategy, BranchPolicy &policy);

/// Two copies of the parity-tagged resource, a controlled sign between the
/// ancillas, Hadamards and ancilla readout; the four outcomes are fixed up
/// with pi phases on the last n modes of a half. When `tp` is null the
/// ideal output of prepare_tp_n is used for both copies.
ProtocolBranches combine_tp_to_tprime(int n, GadgetStrategy strategy, BranchPolicy &policy,
                                      const FockState *tp = nullptr);

/// Two order-n resources and one ancilla that collects the parity of both
/// halves. `parity` on the result is 0 for the even variant, 1 for the odd.
ProtocolBranches prepare_pn_prime(int n, GadgetStrategy strategy, BranchPolicy &policy);

}  // namespace lopt

#endif
