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

#ifndef LOPT_FOCK_STATE_H
#define LOPT_FOCK_STATE_H

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace lopt {

using Complex = std::complex<double>;

/// Photon count per mode. Keys of one FockState all share the same length.
using Occupation = std::vector<std::uint8_t>;

inline constexpr double kPruneTolerance = 1e-12;
inline constexpr int kMaxPhotonsPerMode = 255;

struct InvalidOccupationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ModeMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when every amplitude of a state falls below the prune tolerance.
struct ZeroStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Converts signed per-mode counts, rejecting negative or oversized entries.
Occupation make_occupation(std::span<const int> counts);
Occupation make_occupation(std::initializer_list<int> counts);
int total_photons(const Occupation &occ);

/// Sparse pure state of a fixed number of bosonic modes.
///
/// Terms are kept in lexicographic order of their occupation vectors, which is
/// the canonical order used by serialization and equality.
class FockState {
   public:
    using TermMap = std::map<Occupation, Complex>;

    FockState() = default;
    explicit FockState(std::size_t mode_count);

    static FockState vacuum(std::size_t mode_count);
    static FockState number_state(std::span<const int> counts);
    static FockState number_state(std::initializer_list<int> counts);
    /// Unnormalized superposition, convenient for literals in tests and protocols.
    static FockState superposition(
        std::size_t mode_count, std::initializer_list<std::pair<std::vector<int>, Complex>> terms);

    /// Accumulates `amplitude` onto the `occ` term. Rejects non-finite values.
    void add(const Occupation &occ, Complex amplitude);
    void add(std::span<const int> counts, Complex amplitude);

    std::size_t mode_count() const {
        return mode_count_;
    }
    const TermMap &terms() const {
        return terms_;
    }
    std::size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }

    Complex amplitude(const Occupation &occ) const;
    Complex amplitude(std::initializer_list<int> counts) const;
    double norm_squared() const;
    double norm() const;

    /// Drops terms with |amplitude| <= tol and optionally rescales to unit norm.
    /// Throws ZeroStateError if nothing survives.
    FockState canonicalize(double tol = kPruneTolerance, bool renormalize = true) const;
    /// Same pruning as canonicalize but never throws and never rescales.
    FockState pruned(double tol = kPruneTolerance) const;
    FockState normalized() const;
    FockState scaled(Complex factor) const;

    bool operator==(const FockState &other) const = default;

   private:
    std::size_t mode_count_ = 0;
    TermMap terms_;
};

FockState tensor(const FockState &a, const FockState &b);
FockState operator+(const FockState &a, const FockState &b);

/// <a|b>, conjugate-linear in `a`.
Complex inner_product(const FockState &a, const FockState &b);

/// |<a|b>|^2 / (<a|a><b|b>).
double fidelity(const FockState &a, const FockState &b);

/// Term-wise comparison; a term missing on one side counts as amplitude zero.
bool approx_equal(const FockState &a, const FockState &b, double tol = 1e-12);

/// Output mode i carries input mode `order[i]`. `order` must be a permutation.
FockState permute_modes(const FockState &s, std::span<const int> order);

/// Swaps the occupations of two modes.
FockState swap_modes(const FockState &s, int a, int b);

/// Multiplies each term by exp(i * angle * n_mode).
FockState apply_phase(const FockState &s, int mode, double angle);

/// Appends modes prepared in the given number states.
FockState append_modes(const FockState &s, std::span<const int> counts);

/// Inserts empty modes so that the result has `positions` vacant, counting
/// positions in the output indexing. Inverse of removing those modes.
FockState insert_vacuum_modes(const FockState &s, std::vector<int> positions);

/// Removes `modes`, requiring every term to agree on their occupations.
/// The shared occupation is written to `pattern` (ordered like `modes`).
/// Throws std::invalid_argument if the modes are entangled with the rest.
FockState drop_definite_modes(const FockState &s, std::span<const int> modes, Occupation *pattern = nullptr);

/// True when every term agrees on the occupation of `modes`.
bool modes_are_definite(const FockState &s, std::span<const int> modes);

struct ReducedState {
    std::vector<Occupation> basis;  // occupations of the kept modes
    Eigen::MatrixXcd rho;           // normalized to unit trace
};

/// Reduced density matrix on `modes` (in the order given) after tracing out
/// everything else.
ReducedState reduced_density_matrix(const FockState &s, std::span<const int> modes);

/// Von Neumann entropy in bits of the reduced state on `modes`.
double entanglement_entropy_bits(const FockState &s, std::span<const int> modes);

std::string occupation_string(const Occupation &occ);
std::string to_string(const FockState &s);

}  // namespace lopt

#endif
