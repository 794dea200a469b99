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

#include "lopt/resources.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lopt/gates.h"
#include "lopt/linear_optics.h"
#include "lopt/preparation.h"
#include "lopt/reck.h"

namespace lopt {

double expected_trials(double p) {
    if (!(p > 0) || p > 1) {
        throw std::invalid_argument("success probability must lie in (0, 1]");
    }
    return 1 / p;
}

namespace {

int fourier_elements(int n) {
    return static_cast<int>(decompose_reck(fourier_matrix(n)).elements.size());
}

int ns1_elements() {
    static const int count = static_cast<int>(ns1_network().circuit.elements.size());
    return count;
}

// One controlled sign under a strategy: cost and success.
CostModel gate_cost(GadgetStrategy s) {
    CostModel c;
    switch (s.kind) {
        case GadgetStrategy::Kind::Ideal:
            c.elements = 1;
            break;
        case GadgetStrategy::Kind::NonlinearSign:
            c.elements = 2 + 2 * ns1_elements();
            c.detectors = 4;
            c.single_photons = 2;
            c.nondeterministic_gates = 2;
            c.gate_success = 0.25;
            break;
        case GadgetStrategy::Kind::Teleported:
            c.elements = 2 * fourier_elements(s.n);
            c.detectors = 2 * (s.n + 1);
            c.single_photons = 2 * s.n;
            c.nondeterministic_gates = 2;
            c.gate_success = s.n / (s.n + 1.0);
            break;
    }
    c.success = mode_csign_probability(s);
    return c;
}

void add_gates(CostModel &c, const CostModel &gate, int count) {
    c.elements += count * gate.elements;
    c.detectors += count * gate.detectors;
    c.single_photons += count * gate.single_photons;
    c.nondeterministic_gates += count * gate.nondeterministic_gates;
    c.gate_success = gate.gate_success;
    c.success *= std::pow(gate.success, count);
}

FitResult least_squares(const std::vector<double> &x, const std::vector<double> &y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    FitResult f;
    f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    f.intercept = (sy - f.slope * sx) / n;
    for (std::size_t i = 0; i < x.size(); i++) {
        double e = y[i] - (f.slope * x[i] + f.intercept);
        f.residual += e * e;
    }
    return f;
}

double log_add(double a, double b) {
    double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

CostModel cost_model(const ProtocolSpec &spec) {
    CostModel c;
    const int n = spec.n;
    switch (spec.kind) {
        case ProtocolKind::Ns1:
            c = gate_cost(GadgetStrategy::nonlinear_sign());
            c.elements = ns1_elements();
            c.detectors = 2;
            c.single_photons = 1;
            c.nondeterministic_gates = 1;
            c.success = 0.25;
            break;
        case ProtocolKind::Csign:
            c = gate_cost(spec.strategy);
            break;
        case ProtocolKind::B4Prime:
            c.elements = 4;
            c.single_photons = 2;
            add_gates(c, gate_cost(spec.strategy), 1);
            break;
        case ProtocolKind::TeleportBm1:
            c.elements = 1;
            c.detectors = 2;
            c.single_photons = 1;
            c.nondeterministic_gates = 1;
            c.gate_success = c.success = 0.5;
            break;
        case ProtocolKind::Teleport:
            c.elements = fourier_elements(n);
            c.detectors = n + 1;
            c.single_photons = n;
            c.nondeterministic_gates = 1;
            c.gate_success = c.success = n / (n + 1.0);
            break;
        case ProtocolKind::Tp:
            c.elements = 1 + 4 + 2 * (n - 1);
            c.single_photons = n + 1;
            add_gates(c, gate_cost(spec.strategy), tp_csign_count(n));
            break;
        case ProtocolKind::TPrime: {
            ProtocolSpec tp = spec;
            tp.kind = ProtocolKind::Tp;
            CostModel half = cost_model(tp);
            c.elements = 2 * half.elements + 4;
            c.detectors = 2 * half.detectors + 4;
            c.single_photons = 2 * half.single_photons;
            c.nondeterministic_gates = 2 * half.nondeterministic_gates;
            c.success = half.success * half.success;
            add_gates(c, gate_cost(spec.strategy), 1);
            break;
        }
        case ProtocolKind::PnPrime:
            c.elements = 4;
            c.detectors = 2;
            c.single_photons = 2 * n + 1;
            add_gates(c, gate_cost(spec.strategy), 2 * n);
            break;
        case ProtocolKind::Parity:
            c.elements = 2 * fourier_elements(n);
            c.detectors = 2 * (n + 1);
            c.single_photons = 2 * n;
            c.nondeterministic_gates = 2;
            c.gate_success = n / (n + 1.0);
            c.success = analytic_success(spec).value_or(1);
            break;
        case ProtocolKind::TeleportE:
        case ProtocolKind::Distribute: {
            ProtocolSpec parity = spec;
            parity.kind = ProtocolKind::Parity;
            parity.input.clear();
            if (spec.strategy.kind == GadgetStrategy::Kind::Teleported) {
                parity.n = spec.strategy.n;
                c = cost_model(parity);
            }
            c.elements += spec.kind == ProtocolKind::TeleportE ? 2 : 0;
            c.detectors += spec.kind == ProtocolKind::TeleportE ? 4 : 0;
            c.single_photons += 2;
            c.success = analytic_success(spec).value_or(1);
            break;
        }
    }
    return c;
}

RecursionTable s_recursion_table(int n_max, double c1, double c2, double base, double alpha) {
    if (!(c1 > 0) || !(c2 > 0) || !(base > 0) || !(alpha > 0)) {
        throw std::invalid_argument("recursion constants must be positive");
    }
    if (n_max < 4) {
        throw std::invalid_argument("recursion table needs n_max >= 4");
    }
    RecursionTable t;
    t.c1 = c1;
    t.c2 = c2;
    t.base = base;
    t.alpha = alpha;
    std::vector<double> log_s(n_max + 1, 0.0);
    log_s[1] = std::log(base);
    for (int n = 2; n <= n_max; n++) {
        int m = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
        m = std::clamp(m, 1, n - 1);
        log_s[n] = std::log1p(c1 / std::sqrt(static_cast<double>(n))) + log_add(log_s[n - 1], std::log(c2) + log_s[m]);
    }
    std::vector<double> xs, xl, y;
    for (int n = 1; n <= n_max; n++) {
        t.rows.push_back({n, log_s[n], alpha * n * std::log(4.0)});
        xs.push_back(std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n)));
        xl.push_back(n);
        y.push_back(log_s[n]);
    }
    t.sqrt_log_fit = least_squares(xs, y);
    t.linear_fit = least_squares(xl, y);
    for (int i = n_max - 1; i >= 0; i--) {
        if (t.rows[i].log_s >= t.rows[i].log_naive) {
            t.crossover = i + 2 <= n_max ? i + 2 : -1;
            break;
        }
        if (i == 0) {
            t.crossover = 1;
        }
    }
    t.per_n_decreasing = true;
    for (int n = n_max / 2 + 1; n <= n_max; n++) {
        if (log_s[n] / n >= log_s[n - 1] / (n - 1)) {
            t.per_n_decreasing = false;
        }
    }
    return t;
}

bool TrialStats::within_three_sigma() const {
    if (!analytic) {
        return true;
    }
    const double p = *analytic;
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials));
    return std::abs(rate - p) <= 3 * sigma;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

TrialStats monte_carlo(const ProtocolSpec &spec, std::int64_t trials, std::uint64_t seed, int threads) {
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    threads = std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::int64_t>(trials, 64))));
    std::vector<std::int64_t> hits(threads, 0);
    auto work = [&](int worker) {
        for (std::int64_t i = worker; i < trials; i += threads) {
            auto policy = BranchPolicy::sampled(trial_seed(seed, static_cast<std::uint64_t>(i)));
            auto branches = run_protocol(spec, policy);
            if (branches.size() == 1 && branches[0].succeeded) {
                hits[worker]++;
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; w++) {
            pool.emplace_back(work, w);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    TrialStats s;
    s.trials = trials;
    for (auto h : hits) {
        s.successes += h;
    }
    s.rate = static_cast<double>(s.successes) / static_cast<double>(trials);
    s.half_width95 = 1.96 * std::sqrt(s.rate * (1 - s.rate) / static_cast<double>(trials));
    s.analytic = analytic_success(spec);
    return s;
}

std::string to_csv(const RecursionTable &table) {
    std::ostringstream out;
    out.precision(17);
    out << "n,log_s,log_naive\n";
    for (const auto &r : table.rows) {
        out << r.n << "," << r.log_s << "," << r.log_naive << "\n";
    }
    return out.str();
}

}  // namespace lopt
