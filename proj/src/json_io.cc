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

#include "lopt/json_io.h"

namespace lopt {

namespace {

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw JsonFormatError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

double number(const Json &j, const char *what) {
    if (!j.is_number()) {
        throw JsonFormatError(std::string("field '") + what + "' must be a number");
    }
    return j.get<double>();
}

Json complex_pair(Complex c) {
    return Json::array({c.real(), c.imag()});
}

}  // namespace

Json state_to_json(const FockState &s) {
    Json terms = Json::array();
    for (const auto &[occ, amp] : s.terms()) {
        Json counts = Json::array();
        for (auto c : occ) {
            counts.push_back(static_cast<int>(c));
        }
        terms.push_back({{"occ", counts}, {"re", amp.real()}, {"im", amp.imag()}});
    }
    return {{"modes", s.mode_count()}, {"terms", terms}};
}

FockState state_from_json(const Json &j) {
    const Json &modes = field(j, "modes");
    if (!modes.is_number_integer() || modes.get<long long>() < 0) {
        throw JsonFormatError("'modes' must be a non-negative integer");
    }
    FockState s(modes.get<std::size_t>());
    const Json &terms = field(j, "terms");
    if (!terms.is_array()) {
        throw JsonFormatError("'terms' must be an array");
    }
    for (const auto &t : terms) {
        const Json &occ = field(t, "occ");
        if (!occ.is_array()) {
            throw JsonFormatError("'occ' must be an array");
        }
        std::vector<int> counts;
        for (const auto &c : occ) {
            if (!c.is_number_integer()) {
                throw JsonFormatError("occupations must be integers");
            }
            counts.push_back(c.get<int>());
        }
        s.add(counts, Complex(number(field(t, "re"), "re"), number(field(t, "im"), "im")));
    }
    return s;
}

Json netlist_to_json(const ElementSequence &seq) {
    Json elements = Json::array();
    for (const auto &e : seq.elements) {
        if (e.kind == OpticalElement::Kind::BeamSplitter) {
            elements.push_back({{"kind", "bs"}, {"modes", {e.mode, e.mode2}}, {"theta", e.theta}});
        } else {
            elements.push_back({{"kind", "ps"}, {"modes", {e.mode}}, {"theta", e.theta}});
        }
    }
    return {{"modes", seq.mode_count},
            {"global_phase", {{"re", seq.global_phase.real()}, {"im", seq.global_phase.imag()}}},
            {"elements", elements}};
}

ElementSequence netlist_from_json(const Json &j) {
    ElementSequence seq;
    seq.mode_count = field(j, "modes").get<int>();
    const Json &gp = field(j, "global_phase");
    seq.global_phase = Complex(number(field(gp, "re"), "re"), number(field(gp, "im"), "im"));
    for (const auto &e : field(j, "elements")) {
        const std::string kind = field(e, "kind").get<std::string>();
        const Json &modes = field(e, "modes");
        const double theta = number(field(e, "theta"), "theta");
        if (kind == "bs" && modes.size() == 2) {
            seq.elements.push_back(OpticalElement::beam_splitter(modes[0].get<int>(), modes[1].get<int>(), theta));
        } else if (kind == "ps" && modes.size() == 1) {
            seq.elements.push_back(OpticalElement::phase_shifter(modes[0].get<int>(), theta));
        } else {
            throw JsonFormatError("element must be a 'bs' on two modes or a 'ps' on one");
        }
    }
    return seq;
}

Json matrix_to_json(const Eigen::MatrixXcd &m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); c++) {
            row.push_back(complex_pair(m(r, c)));
        }
        rows.push_back(row);
    }
    return {{"matrix", rows}};
}

Eigen::MatrixXcd matrix_from_json(const Json &j) {
    const Json &rows = field(j, "matrix");
    if (!rows.is_array() || rows.empty()) {
        throw JsonFormatError("'matrix' must be a non-empty array of rows");
    }
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; r++) {
        const Json &row = rows[r];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw JsonFormatError("matrix must be square");
        }
        for (Eigen::Index c = 0; c < n; c++) {
            const Json &e = row[c];
            if (e.is_number()) {
                m(r, c) = e.get<double>();
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
            } else {
                throw JsonFormatError("matrix entries must be numbers or [re, im] pairs");
            }
        }
    }
    return m;
}

Json outcome_to_json(const ConditionalOutcome &o) {
    Json out = Json::array();
    for (auto [mode, count] : o.outcome) {
        out.push_back({mode, count});
    }
    Json j = {{"outcome", out}, {"p", o.probability}};
    if (o.is_pure()) {
        j["state"] = state_to_json(o.post_state());
    } else {
        Json ensemble = Json::array();
        for (const auto &b : o.ensemble) {
            Json counts = Json::array();
            for (auto c : b.counts) {
                counts.push_back(static_cast<int>(c));
            }
            ensemble.push_back({{"counts", counts}, {"p", b.probability}, {"state", state_to_json(b.state)}});
        }
        j["ensemble"] = ensemble;
    }
    return j;
}

Json trace_step_to_json(const TraceStep &t, std::size_t index) {
    return {{"step", index},
            {"kind", t.kind},
            {"detail", t.detail},
            {"p", t.branch_probability},
            {"cumulative", t.cumulative_probability}};
}

std::string trace_jsonl(const ProtocolResult &r) {
    std::string out;
    for (std::size_t i = 0; i < r.trace.size(); i++) {
        out += trace_step_to_json(r.trace[i], i).dump();
        out += '\n';
    }
    return out;
}

Json result_to_json(const ProtocolResult &r) {
    Json j;
    j["succeeded"] = r.succeeded;
    j["p"] = r.probability;
    if (r.failure) {
        j["failure"] = {{"kind", r.failure->kind == FailureKind::BasisProjection ? "basis_projection"
                                                                                 : "herald_mismatch"},
                        {"stage", r.failure->stage},
                        {"mode", r.failure->mode},
                        {"projected", r.failure->projected_value}};
    } else {
        j["failure"] = nullptr;
    }
    if (r.parity) {
        j["parity"] = *r.parity;
    }
    Json corrections = Json::array();
    for (const auto &c : r.corrections) {
        corrections.push_back({{"mode", c.mode}, {"angle", c.angle}});
    }
    j["corrections"] = corrections;
    Json detections = Json::array();
    for (auto [mode, count] : r.detections) {
        detections.push_back({mode, count});
    }
    j["detections"] = detections;
    if (!r.leftover.empty()) {
        Json left = Json::array();
        for (auto c : r.leftover) {
            left.push_back(static_cast<int>(c));
        }
        j["leftover"] = left;
    }
    Json trace = Json::array();
    for (std::size_t i = 0; i < r.trace.size(); i++) {
        trace.push_back(trace_step_to_json(r.trace[i], i));
    }
    j["trace"] = trace;
    j["state"] = state_to_json(r.output_state);
    return j;
}

Json stats_to_json(const TrialStats &s) {
    Json j = {{"trials", s.trials},
              {"successes", s.successes},
              {"rate", s.rate},
              {"half_width95", s.half_width95}};
    if (s.analytic) {
        j["analytic"] = *s.analytic;
        j["within_3sigma"] = s.within_three_sigma();
    } else {
        j["analytic"] = nullptr;
    }
    return j;
}

Json recursion_to_json(const RecursionTable &t) {
    Json rows = Json::array();
    for (const auto &r : t.rows) {
        rows.push_back({{"n", r.n}, {"log_s", r.log_s}, {"log_naive", r.log_naive}});
    }
    auto fit = [](const FitResult &f) {
        return Json{{"slope", f.slope}, {"intercept", f.intercept}, {"residual", f.residual}};
    };
    return {{"c1", t.c1},
            {"c2", t.c2},
            {"base", t.base},
            {"alpha", t.alpha},
            {"sqrt_log_fit", fit(t.sqrt_log_fit)},
            {"linear_fit", fit(t.linear_fit)},
            {"crossover", t.crossover},
            {"subexponential", t.subexponential()},
            {"rows", rows}};
}

}  // namespace lopt
