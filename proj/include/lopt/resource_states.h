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

#ifndef LOPT_RESOURCE_STATES_H
#define LOPT_RESOURCE_STATES_H

#include <string>
#include <vector>

#include "lopt/fock_state.h"

namespace lopt {

struct ResourceKind {
    enum class Kind {
        B4Prime,  // four-mode c-sign-modified Bell pair
        Tn,       // teleportation resource of order n, 2n modes
        TnPrime,  // two Tn copies with c-sign folded in, 4n modes
        TPn,      // Tn plus a parity ancilla qubit, 2n + 2 modes
        PnPrime,  // two Tn copies restricted to a total parity, 4n modes
        E,        // (|0110> - |1001>) / sqrt(2)
    };
    Kind kind = Kind::Tn;
    int n = 1;
    bool odd_variant = false;  // PnPrime only

    static ResourceKind b4_prime() {
        return {Kind::B4Prime, 1, false};
    }
    static ResourceKind tn(int n) {
        return {Kind::Tn, n, false};
    }
    static ResourceKind tn_prime(int n) {
        return {Kind::TnPrime, n, false};
    }
    static ResourceKind tp(int n) {
        return {Kind::TPn, n, false};
    }
    static ResourceKind pn_prime(int n, bool odd = false) {
        return {Kind::PnPrime, n, odd};
    }
    static ResourceKind e() {
        return {Kind::E, 1, false};
    }
    std::string name() const;
};

struct ModeRole {
    std::string role;  // "first", "last", "ancilla", "first_b", ...
    std::vector<int> modes;
};

struct PreparedResource {
    ResourceKind kind;
    FockState state;
    std::vector<ModeRole> roles;

    const std::vector<int> &modes(const std::string &role) const;
};

/// Closed-form resource state. Throws std::invalid_argument for n < 1.
PreparedResource make_resource(ResourceKind kind);

/// |1>^j |0>^{n-j} |0>^j |1>^{n-j}: the j-th unary term of the order-n
/// teleportation resource.
Occupation unary_term(int n, int j);

}  // namespace lopt

#endif
