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

#include "lopt/measurement.h"

#include <map>
#include <stdexcept>
#include <string>

#include "lopt/linear_optics.h"

namespace lopt {

DetectorModel DetectorModel::fanout_counter(int n) {
    if (n < 1) {
        throw std::invalid_argument("fan-out counter needs N >= 1");
    }
    return {Kind::Fanout, n};
}

bool ConditionalOutcome::is_pure() const {
    return ensemble.size() == 1;
}

const FockState &ConditionalOutcome::post_state() const {
    if (!is_pure()) {
        throw std::logic_error("outcome merges several count patterns; its conditional state is mixed");
    }
    return ensemble.front().state;
}

double ConditionalOutcome::fidelity_with(const FockState &target) const {
    if (probability <= 0) {
        return 0;
    }
    double total = 0;
    for (const auto &b : ensemble) {
        total += b.probability * fidelity(b.state, target);
    }
    return total / probability;
}

std::vector<int> ConditionalOutcome::counts() const {
    std::vector<int> out;
    out.reserve(outcome.size());
    for (const auto &[mode, count] : outcome) {
        out.push_back(count);
    }
    return out;
}

namespace {

void validate_modes(const FockState &s, std::span<const int> modes) {
    std::vector<bool> seen(s.mode_count(), false);
    for (int m : modes) {
        if (m < 0 || static_cast<std::size_t>(m) >= s.mode_count()) {
            throw std::out_of_range("measured mode " + std::to_string(m) + " out of range");
        }
        if (seen[m]) {
            throw std::invalid_argument("mode " + std::to_string(m) + " measured twice");
        }
        seen[m] = true;
    }
}

// Splits `s` by the exact occupation of `modes`; each part has those modes removed.
std::map<Occupation, FockState> split_by_counts(const FockState &s, std::span<const int> modes) {
    std::vector<bool> measured(s.mode_count(), false);
    for (int m : modes) {
        measured[m] = true;
    }
    const std::size_t rest = s.mode_count() - modes.size();
    std::map<Occupation, FockState> parts;
    Occupation key(modes.size());
    Occupation kept(rest);
    for (const auto &[occ, amp] : s.terms()) {
        for (std::size_t i = 0; i < modes.size(); ++i) {
            key[i] = occ[modes[i]];
        }
        std::size_t k = 0;
        for (std::size_t i = 0; i < occ.size(); ++i) {
            if (!measured[i]) {
                kept[k++] = occ[i];
            }
        }
        auto it = parts.try_emplace(key, FockState(rest)).first;
        it->second.add(kept, amp);
    }
    return parts;
}

std::vector<ConditionalOutcome> counter_outcomes(const FockState &s, std::span<const int> modes) {
    const double total = s.norm_squared();
    if (total <= 0) {
        throw ZeroStateError("measuring the zero vector");
    }
    std::vector<ConditionalOutcome> out;
    for (auto &[counts, part] : split_by_counts(s, modes)) {
        double p = part.norm_squared() / total;
        if (p <= 0) {
            continue;
        }
        ConditionalOutcome o;
        for (std::size_t i = 0; i < modes.size(); ++i) {
            o.outcome.emplace_back(modes[i], counts[i]);
        }
        o.probability = p;
        o.ensemble.push_back({counts, p, part.normalized()});
        out.push_back(std::move(o));
    }
    return out;
}

// Groups exact count patterns by a coarse key, merging them into mixed outcomes.
template <typename KeyFn>
std::vector<ConditionalOutcome> coarse_grain(
    const std::vector<ConditionalOutcome> &fine, std::span<const int> reported_modes, KeyFn key_of) {
    std::map<std::vector<int>, ConditionalOutcome> grouped;
    for (const auto &f : fine) {
        const auto &branch = f.ensemble.front();
        std::vector<int> key = key_of(branch.counts);
        auto &g = grouped[key];
        if (g.outcome.empty()) {
            for (std::size_t i = 0; i < reported_modes.size(); ++i) {
                g.outcome.emplace_back(reported_modes[i], key[i]);
            }
        }
        g.probability += branch.probability;
        g.ensemble.push_back(branch);
    }
    std::vector<ConditionalOutcome> out;
    for (auto &[k, g] : grouped) {
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

std::vector<ConditionalOutcome> measure_modes(const FockState &s, std::span<const int> modes, DetectorModel model) {
    validate_modes(s, modes);
    switch (model.kind) {
        case DetectorModel::Kind::Counter:
            return counter_outcomes(s, modes);
        case DetectorModel::Kind::Bucket: {
            auto fine = counter_outcomes(s, modes);
            return coarse_grain(fine, modes, [](const Occupation &c) {
                std::vector<int> clicks;
                for (auto n : c) {
                    clicks.push_back(n > 0 ? 1 : 0);
                }
                return clicks;
            });
        }
        case DetectorModel::Kind::Fanout: {
            const int n = model.fanout;
            if (n < 1) {
                throw std::invalid_argument("fan-out counter needs N >= 1");
            }
            // Spread each measured mode over itself plus N-1 fresh vacuum modes.
            FockState spread = s;
            std::vector<int> fanned;
            for (int m : modes) {
                std::vector<int> group{m};
                const int first_new = static_cast<int>(spread.mode_count());
                spread = tensor(spread, FockState::vacuum(n - 1));
                for (int j = 0; j < n - 1; ++j) {
                    group.push_back(first_new + j);
                }
                if (n > 1) {
                    spread = apply_on_modes(spread, fourier_matrix(n - 1), group);
                }
                fanned.insert(fanned.end(), group.begin(), group.end());
            }
            auto fine = counter_outcomes(spread, fanned);
            return coarse_grain(fine, modes, [&](const Occupation &c) {
                std::vector<int> clicks(modes.size(), 0);
                for (std::size_t i = 0; i < c.size(); ++i) {
                    clicks[i / n] += c[i] > 0 ? 1 : 0;
                }
                return clicks;
            });
        }
    }
    throw std::logic_error("unknown detector model");
}

std::optional<ConditionalOutcome> postselect(
    const FockState &s, std::span<const int> modes, std::span<const int> counts) {
    validate_modes(s, modes);
    if (counts.size() != modes.size()) {
        throw std::invalid_argument("postselection needs one count per mode");
    }
    const Occupation wanted = make_occupation(counts);
    const double total = s.norm_squared();
    if (total <= 0) {
        throw ZeroStateError("postselecting the zero vector");
    }
    auto parts = split_by_counts(s, modes);
    auto it = parts.find(wanted);
    if (it == parts.end()) {
        return std::nullopt;
    }
    double p = it->second.norm_squared() / total;
    if (p <= 0) {
        return std::nullopt;
    }
    ConditionalOutcome o;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        o.outcome.emplace_back(modes[i], counts[i]);
    }
    o.probability = p;
    o.ensemble.push_back({wanted, p, it->second.normalized()});
    return o;
}

FanoutResult fanout_count(const FockState &s, int mode, int n) {
    const int modes[1] = {mode};
    FanoutResult r;
    r.outcomes = measure_modes(s, modes, DetectorModel::fanout_counter(n));
    for (const auto &o : r.outcomes) {
        for (const auto &b : o.ensemble) {
            for (auto c : b.counts) {
                if (c >= 2) {
                    r.misdetect_probability += b.probability;
                    break;
                }
            }
        }
    }
    return r;
}

double fanout_misdetect_exact(int k, int n) {
    double ratio = 1;
    for (int i = 0; i < k; ++i) {
        ratio *= static_cast<double>(n - i) / n;
    }
    return 1 - ratio;
}

std::size_t sample_index(const std::vector<ConditionalOutcome> &outcomes, std::mt19937_64 &rng) {
    if (outcomes.empty()) {
        throw std::invalid_argument("no outcomes to sample from");
    }
    double total = 0;
    for (const auto &o : outcomes) {
        total += o.probability;
    }
    // 53 uniform bits; independent of the standard library's distributions.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    double acc = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        acc += outcomes[i].probability;
        if (u < acc) {
            return i;
        }
    }
    return outcomes.size() - 1;
}

ConditionalOutcome sample_outcome(
    const FockState &s, std::span<const int> modes, DetectorModel model, std::mt19937_64 &rng) {
    auto outcomes = measure_modes(s, modes, model);
    return outcomes[sample_index(outcomes, rng)];
}

ConditionalOutcome sample_outcome(const FockState &s, std::span<const int> modes, DetectorModel model, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_outcome(s, modes, model, rng);
}

}  // namespace lopt
