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

#include "run_config.h"

#include <charconv>
#include <fstream>
#include <set>

namespace lopt::cli {

namespace {

template <typename T>
void put(Json &j, const char *key, const std::optional<T> &v) {
    if (v) {
        j[key] = *v;
    }
}

template <typename T>
void take(const Json &j, const char *key, std::optional<T> &v) {
    if (!j.contains(key)) {
        return;
    }
    try {
        v = j.at(key).get<T>();
    } catch (const nlohmann::json::exception &) {
        throw UsageError(std::string("config field '") + key + "' has the wrong type");
    }
}

double parse_double(const std::string &s) {
    double x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw UsageError("bad number '" + s + "' in --input");
    }
    return x;
}

}  // namespace

Json to_json(const RunConfig &c) {
    Json j = Json::object();
    put(j, "command", c.command);
    put(j, "protocol", c.protocol);
    put(j, "suite", c.suite);
    put(j, "matrix", c.matrix);
    put(j, "n", c.n);
    put(j, "strategy", c.strategy);
    put(j, "seed", c.seed);
    put(j, "trials", c.trials);
    put(j, "threads", c.threads);
    put(j, "tol", c.tol);
    put(j, "out", c.out);
    if (c.input) {
        Json in = Json::array();
        for (auto z : *c.input) {
            in.push_back({z.real(), z.imag()});
        }
        j["input"] = in;
    }
    return j;
}

RunConfig config_from_json(const Json &j) {
    if (!j.is_object()) {
        throw UsageError("config must be a JSON object");
    }
    static const std::set<std::string> known = {"command", "protocol", "suite", "matrix", "n", "strategy",
                                                "seed", "trials", "threads", "tol", "out", "input"};
    for (const auto &item : j.items()) {
        if (!known.contains(item.key())) {
            throw UsageError("unknown config field '" + item.key() + "'");
        }
    }
    RunConfig c;
    take(j, "command", c.command);
    take(j, "protocol", c.protocol);
    take(j, "suite", c.suite);
    take(j, "matrix", c.matrix);
    take(j, "n", c.n);
    take(j, "strategy", c.strategy);
    take(j, "seed", c.seed);
    take(j, "trials", c.trials);
    take(j, "threads", c.threads);
    take(j, "tol", c.tol);
    take(j, "out", c.out);
    if (j.contains("input")) {
        const Json &in = j.at("input");
        if (!in.is_array()) {
            throw UsageError("config field 'input' must be an array");
        }
        std::vector<Complex> v;
        for (const auto &z : in) {
            if (z.is_number()) {
                v.emplace_back(z.get<double>(), 0);
            } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
                v.emplace_back(z[0].get<double>(), z[1].get<double>());
            } else {
                throw UsageError("config 'input' items must be numbers or [re, im] pairs");
            }
        }
        c.input = v;
    }
    return c;
}

RunConfig load_config(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw UsageError("cannot read config '" + path + "'");
    }
    Json j = Json::parse(f, nullptr, false);
    if (j.is_discarded()) {
        throw UsageError("config '" + path + "' is not valid JSON");
    }
    return config_from_json(j);
}

RunConfig layer(const RunConfig &top, const RunConfig &base) {
    RunConfig c = base;
    auto over = [](auto &dst, const auto &src) {
        if (src) {
            dst = src;
        }
    };
    over(c.command, top.command);
    over(c.protocol, top.protocol);
    over(c.suite, top.suite);
    over(c.matrix, top.matrix);
    over(c.n, top.n);
    over(c.strategy, top.strategy);
    over(c.seed, top.seed);
    over(c.trials, top.trials);
    over(c.threads, top.threads);
    over(c.tol, top.tol);
    over(c.out, top.out);
    over(c.input, top.input);
    return c;
}

std::vector<Complex> parse_input(const std::string &text) {
    std::vector<Complex> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos) {
            out.emplace_back(parse_double(item), 0);
        } else {
            out.emplace_back(parse_double(item.substr(0, colon)), parse_double(item.substr(colon + 1)));
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

}  // namespace lopt::cli
