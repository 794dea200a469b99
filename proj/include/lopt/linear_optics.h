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

#ifndef LOPT_LINEAR_OPTICS_H
#define LOPT_LINEAR_OPTICS_H

#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "lopt/fock_state.h"

namespace lopt {

inline constexpr double kUnitarityTolerance = 1e-10;

/// Beam-splitter angle giving a 50:50 split for the matrix
/// [[cos t, -sin t], [sin t, cos t]].
inline constexpr double kBalancedAngle = std::numbers::pi / 4;

struct NonUnitaryError : std::invalid_argument {
    NonUnitaryError(const std::string &what, double residual) : std::invalid_argument(what), residual(residual) {
    }
    double residual;
};

/// max |(U^dagger U - I)_{ij}|.
double unitarity_residual(const Eigen::MatrixXcd &u);

/// Square unitary acting on creation operators: a_l^dagger -> sum_m U(m, l) a_m^dagger.
class ModeUnitary {
   public:
    /// Throws NonUnitaryError unless the residual is within kUnitarityTolerance.
    explicit ModeUnitary(Eigen::MatrixXcd matrix);
    static ModeUnitary identity(int dimension);

    int dimension() const {
        return static_cast<int>(matrix_.rows());
    }
    const Eigen::MatrixXcd &matrix() const {
        return matrix_;
    }
    Complex operator()(int row, int col) const {
        return matrix_(row, col);
    }
    ModeUnitary adjoint() const;

   private:
    Eigen::MatrixXcd matrix_;
};

/// this * other: apply `other` first.
ModeUnitary operator*(const ModeUnitary &a, const ModeUnitary &b);

struct OpticalElement {
    enum class Kind { PhaseShifter, BeamSplitter };

    Kind kind = Kind::PhaseShifter;
    int mode = 0;
    int mode2 = -1;  // beam splitters only
    double theta = 0;

    static OpticalElement phase_shifter(int mode, double theta);
    static OpticalElement beam_splitter(int mode, int other, double theta);

    bool operator==(const OpticalElement &) const = default;
};

/// Ordered elements; composition applies elements[0] first, then multiplies
/// by the global phase.
struct ElementSequence {
    int mode_count = 0;
    std::vector<OpticalElement> elements;
    Complex global_phase = 1.0;
};

/// 1x1 [e^{i theta}] or 2x2 [[cos, -sin], [sin, cos]].
ModeUnitary element_matrix(const OpticalElement &e);

/// (n+1)-point discrete Fourier transform, entries omega^{kl}/sqrt(n+1).
ModeUnitary fourier_matrix(int n);

/// Element matrix on its own modes, identity elsewhere.
ModeUnitary embed(const OpticalElement &e, int mode_count);

ModeUnitary compose(const ElementSequence &seq);

/// Exact evolution: each input monomial prod (a_l^dagger)^{n_l} / sqrt(n_l!)
/// is expanded multinomially after substituting a_l^dagger -> sum_m U(m,l) a_m^dagger.
FockState apply_mode_unitary(const FockState &s, const ModeUnitary &u);

/// Same as apply_mode_unitary, but `u` acts on the listed modes only
/// (u's row/column i corresponds to modes[i]).
FockState apply_on_modes(const FockState &s, const ModeUnitary &u, std::span<const int> modes);

/// Moves a sequence onto a larger register: local mode i becomes modes[i].
ElementSequence relabel(const ElementSequence &seq, std::span<const int> modes, int mode_count);

FockState apply_element(const FockState &s, const OpticalElement &e);
FockState apply_sequence(const FockState &s, const ElementSequence &seq);

}  // namespace lopt

#endif
