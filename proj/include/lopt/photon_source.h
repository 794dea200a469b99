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

#ifndef LOPT_PHOTON_SOURCE_H
#define LOPT_PHOTON_SOURCE_H

#include <optional>
#include <stdexcept>
#include <vector>

#include "lopt/fock_state.h"
#include "lopt/measurement.h"

namespace lopt {

constexpr double kSqueezeTail = 1e-12;

class InsufficientCutoffError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct SqueezeParam {
    double r = 0;
    int cutoff = 1;  // largest pair number kept
};

/// Discarded weight sum_{n > cutoff} |c_n|^2 = tanh(r)^{2 (cutoff + 1)}.
double truncation_tail(double r, int cutoff);

/// Smallest cutoff >= 1 whose tail is at most `tail`.
int required_cutoff(double r, double tail = kSqueezeTail);

/// Parameter with the cutoff chosen by required_cutoff.
SqueezeParam squeeze(double r);

/// sum_n c_n |n, n> with c_n = tanh(r)^n / cosh(r), renormalized after
/// truncation. Evolving with exp(-i r (ab + a^dag b^dag)) gives the same
/// amplitudes times (-i)^n; that phase is absorbed into mode 0 here.
/// Throws InsufficientCutoffError if the tail exceeds kSqueezeTail.
FockState two_mode_squeezed_vacuum(SqueezeParam p);

/// exp(-i r (ab + a^dag b^dag)) |00> computed by diagonalizing the pair
/// Hamiltonian truncated to `truncation` pairs. Entry n is the |n, n> amplitude.
std::vector<Complex> squeezer_exponential_amplitudes(double r, int truncation);

struct HeraldResult {
    double herald_probability = 0;
    std::optional<ConditionalOutcome> outcome;  // state on mode 0; empty if the herald never fires
    double fidelity = 0;                        // overlap of the mode-0 state with |1>
};

/// Conditions the pair state on the detector at mode 1 reporting one photon
/// (Counter), a click (Bucket) or exactly one fired port (Fanout).
HeraldResult heralded_single_photon(SqueezeParam p, DetectorModel det);

}  // namespace lopt

#endif
