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

#ifndef LOPT_GATES_H
#define LOPT_GATES_H

#include <span>
#include <stdexcept>
#include <vector>

#include "lopt/fock_state.h"
#include "lopt/linear_optics.h"
#include "lopt/protocol.h"

namespace lopt {

/// Dual-rail qubit on modes (a, b): |0> is |0_a 1_b>, |1> is |1_a 0_b>.
struct BosonicQubit {
    int a = 0;
    int b = 1;
};

class IncoherentQubitError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedInputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// alpha0 |01> + alpha1 |10>. Throws if the amplitudes are not normalized.
FockState encode_qubit(Complex alpha0, Complex alpha1);

/// Qubits packed as (a0, b0, a1, b1, ...); amplitudes indexed by the bit
/// string with the first qubit most significant.
FockState encode_qubits(std::span<const Complex> amplitudes);

/// Inverse of encode_qubits for a state supported exactly on the code space
/// of `qubits` (and nothing else). Throws IncoherentQubitError otherwise.
std::vector<Complex> qubit_amplitudes(const FockState &s, std::span<const BosonicQubit> qubits);

/// Weight of the span{|01>, |10>} on the qubit's modes.
double code_space_weight(const FockState &s, BosonicQubit q);
bool is_coherent(const FockState &s, BosonicQubit q, double tol = 1e-10);

/// Beam splitter B(theta) on (a, b): |0> -> cos|0> - sin|1>, |1> -> sin|0> + cos|1>.
FockState qubit_rotation(const FockState &s, BosonicQubit q, double theta);

/// [[1, 1], [1, -1]] / sqrt(2): a pi phase on mode a followed by B(-pi/4).
ElementSequence hadamard_network(BosonicQubit q, int mode_count);
FockState hadamard(const FockState &s, BosonicQubit q);

/// The symmetric 3x3 interferometer of the nonlinear sign gate.
ModeUnitary ns1_unitary();

struct Ns1Network {
    ElementSequence circuit;  // on 3 modes: signal 0, ancillas 1 and 2
    Occupation ancilla_input;
    Occupation accept;
};
Ns1Network ns1_network();

/// Nonlinear sign on `mode`: |2> picks up a minus sign, heralded with
/// probability 1/4. Throws UnsupportedInputError above two photons.
ProtocolBranches apply_ns1(const FockState &s, int mode, BranchPolicy &policy);

/// (-1)^{n_x n_y} on two modes holding at most one photon each.
FockState ideal_mode_csign(const FockState &s, int x, int y);

/// Mode-level controlled sign realized by `strategy`.
ProtocolBranches mode_csign(const FockState &s, int x, int y, GadgetStrategy strategy, BranchPolicy &policy);
double mode_csign_probability(GadgetStrategy strategy);

/// c-sign on two dual-rail qubits via the nonlinear sign gates.
ProtocolBranches csign_via_ns(const FockState &s, BosonicQubit q1, BosonicQubit q2, BranchPolicy &policy);

/// c-not as the target-Hadamard conjugate of c-sign.
ProtocolBranches cnot(const FockState &s, BosonicQubit control, BosonicQubit target, GadgetStrategy strategy,
                      BranchPolicy &policy);

}  // namespace lopt

#endif
