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

#include "lopt/verify.h"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>

#include "lopt/gates.h"
#include "lopt/linear_optics.h"
#include "lopt/measurement.h"
#include "lopt/parity.h"
#include "lopt/permanent.h"
#include "lopt/photon_source.h"
#include "lopt/preparation.h"
#include "lopt/reck.h"
#include "lopt/registry.h"
#include "lopt/resource_states.h"
#include "lopt/resources.h"
#include "lopt/teleportation.h"

namespace lopt {

namespace {

class Check {
   public:
    explicit Check(double tol) : tol_(tol) {}

    void near(double got, double want, const std::string &what) {
        note(std::abs(got - want), what);
    }

    void note(double err, const std::string &what) {
        if (std::isnan(err)) {
            err = INFINITY;
        }
        worst_ = std::max(worst_, err);
        if (!(err <= tol_)) {
            fail(what + " off by " + fmt(err));
        }
    }

    void require(bool ok, const std::string &what) {
        if (!ok) {
            fail(what);
        }
    }

    void fail(const std::string &why) {
        if (ok_) {
            first_ = why;
        }
        ok_ = false;
    }

    bool ok() const {
        return ok_;
    }
    double worst() const {
        return worst_;
    }
    double tol() const {
        return tol_;
    }
    const std::string &first() const {
        return first_;
    }

    static std::string fmt(double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", x);
        return buf;
    }

   private:
    double tol_;
    double worst_ = 0;
    bool ok_ = true;
    std::string first_;
};

Complex gaussian(std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0, 1);
    return {g(rng), g(rng)};
}

std::vector<Complex> random_amplitudes(std::mt19937_64 &rng, int count) {
    std::vector<Complex> a(count);
    double norm = 0;
    for (auto &x : a) {
        x = gaussian(rng);
        norm += std::norm(x);
    }
    for (auto &x : a) {
        x /= std::sqrt(norm);
    }
    return a;
}

ModeUnitary haar_unitary(int m, std::mt19937_64 &rng) {
    Eigen::MatrixXcd z(m, m);
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < m; j++) {
            z(i, j) = gaussian(rng);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    for (int j = 0; j < m; j++) {
        Complex d = qr.matrixQR()(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return ModeUnitary(q);
}

std::vector<Occupation> occupations_with(int modes, int photons) {
    std::vector<Occupation> out;
    Occupation cur(modes, 0);
    std::function<void(int, int)> rec = [&](int mode, int left) {
        if (mode == modes - 1) {
            cur[mode] = static_cast<std::uint8_t>(left);
            out.push_back(cur);
            return;
        }
        for (int c = left; c >= 0; c--) {
            cur[mode] = static_cast<std::uint8_t>(c);
            rec(mode + 1, left - c);
        }
    };
    rec(0, photons);
    return out;
}

double rho_distance(const ReducedState &a, const ReducedState &b) {
    if (a.basis != b.basis) {
        return INFINITY;
    }
    return (a.rho - b.rho).cwiseAbs().maxCoeff();
}

void ns1_postselection(Check &c, const VerifyOptions &opts) {
    std::mt19937_64 rng(opts.seed);
    auto policy = BranchPolicy::exhaustive();
    const double lambda[3] = {0.5, 0.5, -0.5};
    for (int trial = 0; trial < 50; trial++) {
        auto a = random_amplitudes(rng, 3);
        FockState in(1);
        for (int k = 0; k < 3; k++) {
            in.add(make_occupation({k}), a[k]);
        }
        auto branches = apply_ns1(in, 0, policy);
        double p = success_probability(branches);
        c.near(p, 0.25, "success probability");
        const auto &out = best_success(branches).output_state;
        for (int k = 0; k < 3; k++) {
            Complex amp = out.amplitude({k}) * std::sqrt(p);
            c.note(std::abs(amp - lambda[k] * a[k]), "amplitude factor " + std::to_string(k));
        }
    }
}

void csign_two_ns(Check &c, const VerifyOptions &) {
    auto policy = BranchPolicy::exhaustive();
    const BosonicQubit qs[2] = {{0, 1}, {2, 3}};
    Eigen::Matrix4cd op = Eigen::Matrix4cd::Zero();
    for (int col = 0; col < 4; col++) {
        std::vector<Complex> amps(4, 0.0);
        amps[col] = 1;
        auto branches = csign_via_ns(encode_qubits(amps), qs[0], qs[1], policy);
        double p = success_probability(branches);
        c.near(p, 1.0 / 16, "success probability");
        auto out = qubit_amplitudes(best_success(branches).output_state, qs);
        for (int row = 0; row < 4; row++) {
            op(row, col) = out[row] * std::sqrt(p);
        }
    }
    Eigen::Matrix4cd want = Eigen::Vector4cd(1, 1, 1, -1).asDiagonal();
    op /= op(0, 0) / std::abs(op(0, 0));
    op /= std::abs(op(0, 0));
    c.note((op - want).cwiseAbs().maxCoeff(), "operator entry");
}

void b4_prime_circuit(Check &c, const VerifyOptions &) {
    auto policy = BranchPolicy::exhaustive();
    auto branches = prepare_b4_prime_circuit(policy);
    c.near(success_probability(branches), 1.0 / 16, "success probability");
    auto want = make_resource(ResourceKind::b4_prime()).state;
    for (const auto &b : branches) {
        if (b.succeeded) {
            c.near(fidelity(b.output_state, want), 1, "fidelity");
        }
    }
}

void bm1_teleport(Check &c, const VerifyOptions &opts) {
    std::mt19937_64 rng(opts.seed + 4);
    auto policy = BranchPolicy::exhaustive();
    for (int trial = 0; trial < 20; trial++) {
        auto a = random_amplitudes(rng, 2);
        auto in = encode_qubit(a[0], a[1]);
        auto branches = teleport_bm1(in, 0, policy);
        c.near(success_probability(branches), 0.5, "success probability");
        for (const auto &b : branches) {
            if (b.succeeded) {
                c.near(fidelity(b.output_state, in), 1, "fidelity");
            }
        }
    }
}

void bmn_teleport(Check &c, const VerifyOptions &opts) {
    std::mt19937_64 rng(opts.seed + 5);
    auto policy = BranchPolicy::exhaustive();
    for (int n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 5; trial++) {
            auto a = random_amplitudes(rng, 2);
            auto in = encode_qubit(a[0], a[1]);
            auto branches = teleport_tn(in, 0, n, policy);
            const std::string tag = " n=" + std::to_string(n);
            c.near(1 - success_probability(branches), 1.0 / (n + 1), "failure probability" + tag);
            c.near(total_probability(branches), 1, "total probability" + tag);
            for (const auto &b : branches) {
                if (b.succeeded) {
                    c.near(fidelity(b.output_state, in), 1, "fidelity" + tag);
                }
            }
        }
    }
}

void teleported_csign(Check &c, const VerifyOptions &opts) {
    std::mt19937_64 rng(opts.seed + 6);
    const BosonicQubit qs[2] = {{0, 1}, {2, 3}};
    const int q1[2] = {0, 1};
    const int q2[2] = {2, 3};
    for (int n = 1; n <= 2; n++) {
        const std::string tag = " n=" + std::to_string(n);
        for (int trial = 0; trial < 5; trial++) {
            auto policy = BranchPolicy::exhaustive();
            auto amps = random_amplitudes(rng, 4);
            auto in = encode_qubits(amps);
            auto branches = csign_teleported(in, qs[0], qs[1], n, policy);
            const double q = n / (n + 1.0);
            c.near(success_probability(branches), q * q, "success probability" + tag);
            auto want = ideal_mode_csign(in, 0, 2);
            for (const auto &b : branches) {
                if (b.succeeded) {
                    c.near(fidelity(b.output_state, want), 1, "success fidelity" + tag);
                    continue;
                }
                if (!b.failure || b.failure->kind != FailureKind::BasisProjection) {
                    c.fail("failure branch without a basis projection record" + tag);
                    continue;
                }
                // The untouched qubit, conditioned on the recorded projection.
                const int v = b.failure->projected_value;
                const bool first = b.failure->stage == "csign first";
                Complex c0 = first ? amps[2 * v] : amps[v];
                Complex c1 = first ? amps[2 * v + 1] : amps[2 + v];
                double norm = std::sqrt(std::norm(c0) + std::norm(c1));
                auto other = encode_qubit(c0 / norm, c1 / norm);
                const int both[2] = {0, 1};
                auto after = reduced_density_matrix(b.output_state, first ? std::span<const int>(q2)
                                                                           : std::span<const int>(q1));
                c.note(rho_distance(after, reduced_density_matrix(other, both)),
                       "untouched qubit after " + b.failure->stage + tag);
            }
        }
    }
}

void tp_preparation(Check &c, const VerifyOptions &) {
    for (int n = 1; n <= 3; n++) {
        const std::string tag = " n=" + std::to_string(n);
        auto policy = BranchPolicy::exhaustive();
        auto tp = prepare_tp_n(n, GadgetStrategy::ideal(), policy);
        auto want_tp = make_resource(ResourceKind::tp(n)).state;
        c.require(tp.size() == 1 && tp[0].succeeded, "ideal preparation branched" + tag);
        c.near(fidelity(best_success(tp).output_state, want_tp), 1, "tp fidelity" + tag);
        auto combined = combine_tp_to_tprime(n, GadgetStrategy::ideal(), policy);
        c.require(combined.size() == 4, "expected four assembly outcomes" + tag);
        auto want = make_resource(ResourceKind::tn_prime(n)).state;
        for (const auto &b : combined) {
            c.require(b.succeeded, "assembly outcome not corrected" + tag);
            c.near(b.probability, 0.25, "outcome probability" + tag);
            c.near(fidelity(b.output_state, want), 1, "corrected fidelity" + tag);
        }
    }
}

void parity_checks(Check &c, const VerifyOptions &opts) {
    const int occ[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const int expected[4] = {0, 1, 1, 0};
    const int n = 2;
    for (int i = 0; i < 4; i++) {
        auto policy = BranchPolicy::exhaustive();
        auto branches = parity_measure(FockState::number_state(occ[i]), 0, 1, n, policy);
        for (const auto &b : branches) {
            if (b.succeeded) {
                c.require(b.parity && *b.parity == expected[i],
                          "wrong parity on |" + std::to_string(occ[i][0]) + std::to_string(occ[i][1]) + ">");
            }
        }
        c.require(success_probability(branches) > 0, "parity never reported");
    }
    std::mt19937_64 rng(opts.seed + 8);
    for (int sector = 0; sector < 2; sector++) {
        for (int trial = 0; trial < 3; trial++) {
            auto a = random_amplitudes(rng, 2);
            FockState in = sector == 0
                               ? FockState::superposition(2, {{{0, 0}, a[0]}, {{1, 1}, a[1]}})
                               : FockState::superposition(2, {{{0, 1}, a[0]}, {{1, 0}, a[1]}});
            auto policy = BranchPolicy::exhaustive();
            for (const auto &b : parity_measure(in, 0, 1, n, policy)) {
                if (b.succeeded) {
                    c.require(b.parity && *b.parity == sector, "superposition parity");
                    c.near(fidelity(b.output_state, in), 1, "sector superposition fidelity");
                }
            }
        }
    }
    auto policy = BranchPolicy::exhaustive();
    auto dist = distribute_entanglement(GadgetStrategy::ideal(), policy);
    c.near(success_probability(dist), 0.5, "distribution acceptance");
    const int far[2] = {2, 3};
    Check ent(std::max(c.tol(), 1e-8));
    for (const auto &b : dist) {
        if (b.succeeded) {
            ent.near(entanglement_entropy_bits(b.output_state, far), 1, "accepted-state entropy");
        }
    }
    if (!ent.ok()) {
        c.fail(ent.first());
    }
}

void fanout_checks(Check &c, const VerifyOptions &) {
    for (int big_n : {4, 10, 16, 32}) {
        for (int k = 0; k <= 4; k++) {
            double falling = 1;
            for (int i = 0; i < k; i++) {
                falling *= static_cast<double>(big_n - i) / big_n;
            }
            auto r = fanout_count(FockState::number_state({k}), 0, big_n);
            const std::string tag = " k=" + std::to_string(k) + " N=" + std::to_string(big_n);
            c.near(r.misdetect_probability, 1 - falling, "misdetection" + tag);
            c.require(r.misdetect_probability <= k * (k - 1) / (2.0 * big_n) + 1e-12, "bound exceeded" + tag);
        }
    }
    c.near(fanout_count(FockState::number_state({2}), 0, 10).misdetect_probability, 0.1, "k=2 N=10");
}

void oracle_checks(Check &c, const VerifyOptions &opts) {
    std::mt19937_64 rng(opts.seed + 10);
    for (int trial = 0; trial < 20; trial++) {
        for (int m = 1; m <= 4; m++) {
            auto u = haar_unitary(m, rng);
            for (int photons = 0; photons <= 3; photons++) {
                auto basis = occupations_with(m, photons);
                for (const auto &in : basis) {
                    FockState s(m);
                    s.add(in, 1.0);
                    auto evolved = apply_mode_unitary(s, u);
                    for (const auto &out : basis) {
                        c.note(std::abs(evolved.amplitude(out) - transition_amplitude_permanent(u, in, out)),
                               "permanent vs expansion");
                    }
                }
            }
        }
    }
    // The squeezer check has its own looser floor.
    Check sq(std::max(c.tol(), 1e-8));
    for (double r : {0.05, 0.1, 0.2, 0.3, 0.4, 0.5}) {
        const int cutoff = required_cutoff(r);
        auto oracle = squeezer_exponential_amplitudes(r, std::max(2 * cutoff, 40));
        Complex phase = 1;
        for (int n = 0; n <= cutoff; n++) {
            sq.note(std::abs(oracle[n] - phase * std::pow(std::tanh(r), n) / std::cosh(r)),
                    "squeezer amplitude r=" + Check::fmt(r));
            phase *= Complex(0, -1);
        }
    }
    if (!sq.ok()) {
        c.fail(sq.first());
    }
}

void reck_checks(Check &c, const VerifyOptions &opts) {
    std::mt19937_64 rng(opts.seed + 11);
    for (int trial = 0; trial < 50; trial++) {
        const int m = 1 + trial % 6;
        auto u = haar_unitary(m, rng);
        auto seq = decompose_reck(u);
        c.note((compose(seq).matrix() - u.matrix()).cwiseAbs().maxCoeff(), "recomposition m=" + std::to_string(m));
    }
}

void herald_checks(Check &c, const VerifyOptions &) {
    for (double r : {0.05, 0.1, 0.3, 0.5, 0.8}) {
        auto h = heralded_single_photon(squeeze(r), DetectorModel::counter());
        c.require(h.outcome.has_value(), "counter herald never fired");
        c.near(h.fidelity, 1, "counter-heralded fidelity r=" + Check::fmt(r));
    }
    double last = 0;
    for (double r : {0.5, 0.3, 0.1, 0.05}) {
        double f = heralded_single_photon(squeeze(r), DetectorModel::bucket()).fidelity;
        c.require(f > last && f < 1, "bucket fidelity not increasing at r=" + Check::fmt(r));
        last = f;
    }
    double limit = heralded_single_photon(squeeze(1e-4), DetectorModel::bucket()).fidelity;
    c.require(1 - limit < 1e-7, "bucket fidelity does not approach 1");
}

void monte_carlo_checks(Check &c, const VerifyOptions &opts) {
    struct Case {
        ProtocolKind kind;
        int n;
        GadgetStrategy strategy;
        std::int64_t trials;
    };
    const Case cases[3] = {
        {ProtocolKind::Ns1, 1, GadgetStrategy::ideal(), 100000},
        {ProtocolKind::Csign, 1, GadgetStrategy::nonlinear_sign(), 200000},
        {ProtocolKind::Teleport, 3, GadgetStrategy::ideal(), 100000},
    };
    for (const auto &k : cases) {
        ProtocolSpec spec{k.kind, k.n, k.strategy, {}};
        auto stats = monte_carlo(spec, k.trials, opts.seed, opts.threads);
        double p = stats.analytic.value_or(NAN);
        double sigma = std::sqrt(p * (1 - p) / static_cast<double>(k.trials));
        double z = std::abs(stats.rate - p) / sigma;
        // Errors here are in units of the binomial sigma.
        c.note(z, protocol_name(k.kind) + " rate " + Check::fmt(stats.rate) + " vs " + Check::fmt(p));
    }
}

void recursion_checks(Check &c, const VerifyOptions &) {
    auto t = s_recursion_table(400);
    c.require(t.sqrt_log_fit.residual < t.linear_fit.residual,
              "sqrt(n) log n fit residual " + Check::fmt(t.sqrt_log_fit.residual) + " not below linear " +
                  Check::fmt(t.linear_fit.residual));
    c.require(t.per_n_decreasing, "log S(n)/n not decreasing");
    c.require(t.crossover > 0, "no crossover against the naive model");
    for (std::size_t i = 1; i < t.rows.size(); i++) {
        if (t.rows[i].log_s < t.rows[i - 1].log_s || !std::isfinite(t.rows[i].log_s)) {
            c.fail("S(n) not finite and nondecreasing at n=" + std::to_string(t.rows[i].n));
            break;
        }
    }
}

struct Criterion {
    int id;
    const char *name;
    double tol;  // criterion 13 counts binomial sigmas and ignores overrides
    double time_limit;
    void (*run)(Check &, const VerifyOptions &);
};

const Criterion kCriteria[] = {
    {1, "ns1 post-selection", 1e-10, 1, ns1_postselection},
    {2, "c-sign via two ns1", 1e-10, 5, csign_two_ns},
    {3, "four-mode resource circuit", 1e-10, 0, b4_prime_circuit},
    {4, "bm1 teleportation", 1e-10, 0, bm1_teleport},
    {5, "fourier teleportation n=1..4", 1e-10, 30, bmn_teleport},
    {6, "teleported c-sign n=1,2", 1e-10, 0, teleported_csign},
    {7, "parity-tagged resource and assembly", 1e-10, 0, tp_preparation},
    {8, "nondestructive parity", 1e-10, 0, parity_checks},
    {9, "fan-out misdetection", 1e-10, 0, fanout_checks},
    {10, "oracle equivalence", 1e-10, 0, oracle_checks},
    {11, "reck round trip", 1e-10, 0, reck_checks},
    {12, "heralded source", 1e-10, 0, herald_checks},
    {13, "monte-carlo consistency", 3, 120, monte_carlo_checks},
    {14, "recursion growth", 0, 0, recursion_checks},
};

}  // namespace

std::vector<std::string> suite_names() {
    return {"probabilities", "oracles", "states", "resources", "all"};
}

std::vector<int> suite_criteria(const std::string &suite) {
    if (suite == "probabilities") {
        return {1, 2, 4, 5, 6, 8, 9};
    }
    if (suite == "oracles") {
        return {10, 11};
    }
    if (suite == "states") {
        return {3, 7, 12};
    }
    if (suite == "resources") {
        return {13, 14};
    }
    if (suite == "all") {
        return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14};
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

CriterionResult run_criterion(int id, const VerifyOptions &opts) {
    const Criterion *spec = nullptr;
    for (const auto &k : kCriteria) {
        if (k.id == id) {
            spec = &k;
        }
    }
    if (!spec) {
        throw std::invalid_argument("no criterion " + std::to_string(id));
    }
    CriterionResult r;
    r.id = id;
    r.name = spec->name;
    r.tolerance = opts.tol && id != 13 && id != 14 ? *opts.tol : spec->tol;
    r.time_limit = spec->time_limit;
    Check c(r.tolerance);
    auto t0 = std::chrono::steady_clock::now();
    try {
        spec->run(c, opts);
    } catch (const std::exception &e) {
        c.fail(std::string("threw: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.worst_error = c.worst();
    r.passed = c.ok();
    r.detail = c.first();
    if (r.passed && r.time_limit > 0 && r.seconds > r.time_limit) {
        r.passed = false;
        r.detail = "took " + Check::fmt(r.seconds) + " s, limit " + Check::fmt(r.time_limit) + " s";
    }
    return r;
}

std::vector<CriterionResult> run_suite(const std::string &suite, const VerifyOptions &opts) {
    std::vector<CriterionResult> out;
    for (int id : suite_criteria(suite)) {
        out.push_back(run_criterion(id, opts));
    }
    return out;
}

std::string format_line(const CriterionResult &r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %2d  %-36s err=%-9.3g tol=%-7.3g %.2fs", r.passed ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.worst_error, r.tolerance, r.seconds);
    std::string line = buf;
    if (r.time_limit > 0) {
        std::snprintf(buf, sizeof buf, " (limit %gs)", r.time_limit);
        line += buf;
    }
    if (!r.passed && !r.detail.empty()) {
        line += "  " + r.detail;
    }
    return line;
}

}  // namespace lopt
