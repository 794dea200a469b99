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

#ifndef LOPT_PERMANENT_H
#define LOPT_PERMANENT_H

#include <Eigen/Dense>

#include "lopt/fock_state.h"
#include "lopt/linear_optics.h"

namespace lopt {

/// Permanent of a square matrix by Ryser's inclusion-exclusion formula with
/// Gray-code ordering. O(2^n n).
Complex permanent(const Eigen::MatrixXcd &a);

/// <out| U |in> computed as perm(U[out, in]) / sqrt(prod in! prod out!), where
/// the submatrix repeats row m out_m times and column l in_l times.
/// Independent of apply_mode_unitary; returns 0 when photon numbers differ.
Complex transition_amplitude_permanent(const ModeUnitary &u, const Occupation &in, const Occupation &out);

}  // namespace lopt

#endif
