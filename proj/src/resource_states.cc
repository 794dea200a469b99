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

#include "lopt/resource_states.h"

#include <cmath>
#include <stdexcept>

namespace lopt {

namespace {

std::vector<int> range(int begin, int count) {
    std::vector<int> out(count);
    for (int i = 0; i < count; i++) {
        out[i] = begin + i;
    }
    return out;
}

Occupation concat(const Occupation &a, const Occupation &b) {
    Occupation out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<ModeRole> pair_roles(int n) {
    return {{"first", range(0, n)}, {"last", range(n, n)}, {"first_b", range(2 * n, n)}, {"last_b", range(3 * n, n)}};
}

}  // namespace

std::string ResourceKind::name() const {
    switch (kind) {
        case Kind::B4Prime:
            return "b4prime";
        case Kind::Tn:
            return "tn(" + std::to_string(n) + ")";
        case Kind::TnPrime:
            return "tnprime(" + std::to_string(n) + ")";
        case Kind::TPn:
            return "tp(" + std::to_string(n) + ")";
        case Kind::PnPrime:
            return std::string(odd_variant ? "pnprime_odd(" : "pnprime(") + std::to_string(n) + ")";
        case Kind::E:
            return "e";
    }
    return "?";
}

const std::vector<int> &PreparedResource::modes(const std::string &role) const {
    for (const auto &r : roles) {
        if (r.role == role) {
            return r.modes;
        }
    }
    throw std::out_of_range("resource has no mode role '" + role + "'");
}

Occupation unary_term(int n, int j) {
    if (j < 0 || j > n) {
        throw std::out_of_range("unary term index out of range");
    }
    Occupation occ(2 * n, 0);
    for (int i = 0; i < j; i++) {
        occ[i] = 1;
    }
    for (int i = n + j; i < 2 * n; i++) {
        occ[i] = 1;
    }
    return occ;
}

PreparedResource make_resource(ResourceKind kind) {
    using K = ResourceKind::Kind;
    const int n = kind.n;
    if (n < 1) {
        throw std::invalid_argument("resource order must be at least 1");
    }
    PreparedResource r{kind, FockState(0), {}};
    switch (kind.kind) {
        case K::B4Prime: {
            r.state = FockState::superposition(
                4, {{{1, 0, 1, 0}, 0.5}, {{0, 1, 1, 0}, 0.5}, {{1, 0, 0, 1}, 0.5}, {{0, 1, 0, 1}, -0.5}});
            r.roles = {{"first", {0, 1}}, {"last", {2, 3}}};
            break;
        }
        case K::Tn: {
            r.state = FockState(2 * n);
            const double amp = 1 / std::sqrt(n + 1.0);
            for (int j = 0; j <= n; j++) {
                r.state.add(unary_term(n, j), amp);
            }
            r.roles = {{"first", range(0, n)}, {"last", range(n, n)}};
            break;
        }
        case K::TnPrime: {
            r.state = FockState(4 * n);
            const double amp = 1 / (n + 1.0);
            for (int j = 0; j <= n; j++) {
                for (int i = 0; i <= n; i++) {
                    double sign = ((n - j) * (n - i)) % 2 == 0 ? 1 : -1;
                    r.state.add(concat(unary_term(n, j), unary_term(n, i)), sign * amp);
                }
            }
            r.roles = pair_roles(n);
            break;
        }
        case K::TPn: {
            r.state = FockState(2 * n + 2);
            const double amp = 1 / std::sqrt(n + 1.0);
            for (int j = 0; j <= n; j++) {
                Occupation anc{static_cast<std::uint8_t>((n - j) % 2), static_cast<std::uint8_t>((n - j + 1) % 2)};
                r.state.add(concat(unary_term(n, j), anc), amp);
            }
            r.roles = {{"first", range(0, n)}, {"last", range(n, n)}, {"ancilla", {2 * n, 2 * n + 1}}};
            break;
        }
        case K::PnPrime: {
            r.state = FockState(4 * n);
            const int want = kind.odd_variant ? 1 : 0;
            int terms = 0;
            for (int j = 0; j <= n; j++) {
                for (int i = 0; i <= n; i++) {
                    if ((i + j) % 2 == want) {
                        r.state.add(concat(unary_term(n, j), unary_term(n, i)), 1.0);
                        terms++;
                    }
                }
            }
            r.state = r.state.scaled(1 / std::sqrt(static_cast<double>(terms)));
            r.roles = pair_roles(n);
            break;
        }
        case K::E: {
            const double h = 1 / std::sqrt(2.0);
            r.state = FockState::superposition(4, {{{0, 1, 1, 0}, h}, {{1, 0, 0, 1}, -h}});
            r.roles = {{"first", {0, 1}}, {"last", {2, 3}}};
            break;
        }
        default:
            throw std::invalid_argument("unknown resource kind");
    }
    return r;
}

}  // namespace lopt
