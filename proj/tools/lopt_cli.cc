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

// lopt run | decompose | verify. JSON goes to stdout (or --out), a short
// summary to stderr. Exit codes: 0 ok, 1 check failed, 2 usage error.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "lopt/json_io.h"
#include "lopt/linear_optics.h"
#include "lopt/reck.h"
#include "lopt/registry.h"
#include "lopt/resources.h"
#include "lopt/verify.h"
#include "run_config.h"

namespace lopt::cli {
namespace {

constexpr double kDefaultTol = 1e-10;

struct Flags {
    std::string config;
    std::string input;
    bool dump_config = false;
    RunConfig cfg;
};

void add_common(CLI::App *sub, Flags &f) {
    sub->add_option("--config", f.config, "JSON config file (default: $LOPT_CONFIG)");
    sub->add_option("--seed", f.cfg.seed, "RNG seed; required for any sampling");
    sub->add_option("--tol", f.cfg.tol, "numeric tolerance override");
    sub->add_option("--out", f.cfg.out, "write JSON here instead of stdout");
    sub->add_option("--threads", f.cfg.threads, "Monte-Carlo worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--dump-config", f.dump_config, "print the effective config and exit");
}

void emit(const Json &j, const RunConfig &cfg) {
    const std::string text = j.dump(2) + "\n";
    if (cfg.out) {
        std::ofstream f(*cfg.out, std::ios::binary);
        if (!f) {
            throw UsageError("cannot write '" + *cfg.out + "'");
        }
        f << text;
    } else {
        std::fwrite(text.data(), 1, text.size(), stdout);
    }
}

int worker_threads(const RunConfig &cfg) {
    if (cfg.threads) {
        return *cfg.threads;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

ProtocolSpec spec_of(const RunConfig &cfg) {
    if (!cfg.protocol) {
        throw UsageError("run needs a protocol name");
    }
    ProtocolSpec spec;
    try {
        spec.kind = parse_protocol(*cfg.protocol);
    } catch (const std::invalid_argument &) {
        std::string names;
        for (const auto &n : protocol_names()) {
            names += (names.empty() ? "" : ", ") + n;
        }
        throw UsageError("unknown protocol '" + *cfg.protocol + "' (expected one of: " + names + ")");
    }
    spec.n = cfg.n.value_or(1);
    if (spec.n < 1) {
        throw UsageError("--n must be at least 1");
    }
    spec.strategy = cfg.strategy ? parse_strategy(*cfg.strategy, spec.n) : default_strategy(spec.kind, spec.n);
    if (cfg.input) {
        spec.input = *cfg.input;
    }
    return spec;
}

int cmd_run(const RunConfig &cfg) {
    if (cfg.trials && !cfg.seed) {
        throw UsageError("--trials needs --seed");
    }
    if (cfg.trials && *cfg.trials < 1) {
        throw UsageError("--trials must be at least 1");
    }
    const ProtocolSpec spec = spec_of(cfg);
    const FockState input = protocol_input(spec);
    auto policy = BranchPolicy::exhaustive();
    auto branches = coalesce(run_protocol(spec, policy));
    const auto analytic = analytic_success(spec);
    const double p = success_probability(branches);

    Json report;
    report["command"] = "run";
    report["protocol"] = protocol_name(spec.kind);
    report["n"] = spec.n;
    report["strategy"] = spec.strategy.name();
    report["input"] = state_to_json(input);
    report["analytic_success"] = analytic ? Json(*analytic) : Json(nullptr);
    report["success_probability"] = p;
    report["failure_probability"] = 1 - p;
    Json list = Json::array();
    for (const auto &b : branches) {
        list.push_back(result_to_json(b));
    }
    report["branches"] = list;
    std::fprintf(stderr, "%s: success %.6g", protocol_name(spec.kind).c_str(), p);
    if (analytic) {
        std::fprintf(stderr, " (analytic %.6g)", *analytic);
    }
    std::fprintf(stderr, ", %zu branches\n", branches.size());

    if (cfg.seed) {
        auto sampled = BranchPolicy::sampled(*cfg.seed);
        auto one = run_protocol(spec, sampled);
        report["sample"] = {{"seed", *cfg.seed}, {"result", result_to_json(one.at(0))}};
    }
    int code = 0;
    if (cfg.trials) {
        auto stats = monte_carlo(spec, *cfg.trials, *cfg.seed, worker_threads(cfg));
        Json mc = stats_to_json(stats);
        mc["seed"] = *cfg.seed;
        report["monte_carlo"] = mc;
        std::fprintf(stderr, "monte carlo: %lld/%lld = %.6g +- %.3g%s\n", static_cast<long long>(stats.successes),
                     static_cast<long long>(stats.trials), stats.rate, stats.half_width95,
                     stats.analytic ? (stats.within_three_sigma() ? ", within 3 sigma" : ", OUTSIDE 3 sigma") : "");
        if (!stats.within_three_sigma()) {
            code = 1;
        }
    }
    emit(report, cfg);
    return code;
}

int cmd_decompose(const RunConfig &cfg) {
    if (!cfg.matrix) {
        throw UsageError("decompose needs a matrix file");
    }
    std::ifstream f(*cfg.matrix);
    if (!f) {
        throw UsageError("cannot read '" + *cfg.matrix + "'");
    }
    Json in = Json::parse(f, nullptr, false);
    if (in.is_discarded()) {
        throw UsageError("'" + *cfg.matrix + "' is not valid JSON");
    }
    Eigen::MatrixXcd m;
    try {
        m = matrix_from_json(in);
    } catch (const JsonFormatError &e) {
        throw UsageError(e.what());
    }
    const double tol = cfg.tol.value_or(kDefaultTol);
    const double unitarity = unitarity_residual(m);
    if (unitarity > tol) {
        std::fprintf(stderr, "error: matrix is not unitary (residual %.3g > tol %.3g)\n", unitarity, tol);
        return 1;
    }
    ModeUnitary u(m);
    auto seq = decompose_reck(u);
    const double residual = (compose(seq).matrix() - m).cwiseAbs().maxCoeff();
    Json out = netlist_to_json(seq);
    out["residual"] = residual;
    emit(out, cfg);
    std::fprintf(stderr, "%zu elements, recomposition residual %.3g\n", seq.elements.size(), residual);
    return residual <= tol ? 0 : 1;
}

int cmd_verify(const RunConfig &cfg) {
    const std::string suite = cfg.suite.value_or("all");
    std::vector<int> ids;
    try {
        ids = suite_criteria(suite);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    VerifyOptions opts;
    if (cfg.seed) {
        opts.seed = *cfg.seed;
    }
    opts.tol = cfg.tol;
    opts.threads = worker_threads(cfg);
    Json list = Json::array();
    bool all = true;
    for (int id : ids) {
        auto r = run_criterion(id, opts);
        std::fprintf(stderr, "%s\n", format_line(r).c_str());
        all = all && r.passed;
        // Wall time stays on stderr so reports are reproducible.
        list.push_back({{"id", r.id},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"worst_error", r.worst_error},
                        {"tolerance", r.tolerance},
                        {"time_limit", r.time_limit},
                        {"detail", r.detail}});
    }
    emit({{"command", "verify"}, {"suite", suite}, {"seed", opts.seed}, {"passed", all}, {"criteria", list}},
         cfg);
    return all ? 0 : 1;
}

int run(int argc, char **argv) {
    CLI::App app{"Linear-optics protocol simulator"};
    app.require_subcommand(1, 1);
    Flags f;

    auto *run_cmd = app.add_subcommand("run", "run a protocol and report its branches");
    std::string protocol;
    run_cmd->add_option("protocol", protocol, "protocol name");
    run_cmd->add_option("--n", f.cfg.n, "resource order / size");
    run_cmd->add_option("--strategy", f.cfg.strategy, "ideal, ns or teleported")
        ->check(CLI::IsMember({"ideal", "ns", "teleported"}));
    run_cmd->add_option("--trials", f.cfg.trials, "Monte-Carlo trials (needs --seed)");
    run_cmd->add_option("--input", f.input, "amplitudes: re or re:im, comma separated");
    add_common(run_cmd, f);

    auto *dec_cmd = app.add_subcommand("decompose", "beam-splitter netlist of a unitary");
    std::string matrix;
    dec_cmd->add_option("matrix", matrix, "JSON matrix file");
    add_common(dec_cmd, f);

    auto *ver_cmd = app.add_subcommand("verify", "run an acceptance suite");
    std::string suite;
    ver_cmd->add_option("suite", suite, "probabilities, oracles, states, resources or all");
    add_common(ver_cmd, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    RunConfig &flags = f.cfg;
    CLI::App *sub = app.get_subcommands().front();
    flags.command = sub->get_name();
    if (!protocol.empty()) {
        flags.protocol = protocol;
    }
    if (!matrix.empty()) {
        flags.matrix = matrix;
    }
    if (!suite.empty()) {
        flags.suite = suite;
    }
    if (!f.input.empty()) {
        flags.input = parse_input(f.input);
    }

    RunConfig file;
    std::string path = f.config;
    if (path.empty()) {
        if (const char *env = std::getenv("LOPT_CONFIG"); env && *env) {
            path = env;
        }
    }
    if (!path.empty()) {
        file = load_config(path);
    }
    RunConfig cfg = layer(flags, file);

    if (f.dump_config) {
        std::printf("%s\n", to_json(cfg).dump(2).c_str());
        return 0;
    }
    if (*cfg.command == "run") {
        return cmd_run(cfg);
    }
    if (*cfg.command == "decompose") {
        return cmd_decompose(cfg);
    }
    return cmd_verify(cfg);
}

std::string one_line(std::string s) {
    for (auto &c : s) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

}  // namespace
}  // namespace lopt::cli

int main(int argc, char **argv) {
    using namespace lopt::cli;
    try {
        return run(argc, argv);
    } catch (const UsageError &e) {
        std::fprintf(stderr, "error: %s\n", one_line(e.what()).c_str());
        return 2;
    } catch (const std::invalid_argument &e) {
        std::fprintf(stderr, "error: %s\n", one_line(e.what()).c_str());
        return 2;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", one_line(e.what()).c_str());
        return 1;
    }
}
