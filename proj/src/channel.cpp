// Copyright 2026 The graphfid Authors
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

#include "graphfid/channel.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "graphfid/errors.hpp"

namespace graphfid {

namespace {

constexpr double kTol = 1e-12;

double clamp_probability(double v, const char *what) {
    if (std::isnan(v) || v < -kTol || v > 1.0 + kTol) {
        throw UsageError(std::string(what) + " must be a probability in [0, 1]");
    }
    return std::min(std::max(v, 0.0), 1.0);
}

}  // namespace

PauliChannel PauliChannel::make(double px, double py, double pz) {
    PauliChannel ch;
    ch.px = clamp_probability(px, "px");
    ch.py = clamp_probability(py, "py");
    ch.pz = clamp_probability(pz, "pz");
    if (ch.px + ch.py + ch.pz > 1.0 + kTol) {
        throw UsageError("px + py + pz must not exceed 1");
    }
    return ch;
}

PauliChannel depolarizing(double p) {
    p = clamp_probability(p, "p");
    return PauliChannel::make(p / 3, p / 3, p / 3);
}

PauliChannel phase_flip(double p) {
    p = clamp_probability(p, "p");
    return PauliChannel::make(0, 0, p);
}

PauliChannel interpolated(double p, double delta) {
    p = clamp_probability(p, "p");
    if (std::isnan(delta) || delta < -kTol || delta > p / 3 + kTol) {
        throw UsageError("delta must lie in [0, p/3]");
    }
    delta = std::min(std::max(delta, 0.0), p / 3);
    return PauliChannel::make(p / 3 - delta, p / 3 - delta, p / 3 + 2 * delta);
}

namespace {

double parse_double_field(std::string_view text, const std::string &what) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw UsageError("invalid " + what + ": '" + std::string(text) + "'");
    }
    return value;
}

// Splits "a=1,b=2" into (key, value) pairs in order.
std::vector<std::pair<std::string_view, std::string_view>> parse_kv(std::string_view args) {
    std::vector<std::pair<std::string_view, std::string_view>> out;
    while (!args.empty()) {
        size_t comma = args.find(',');
        std::string_view item = args.substr(0, comma);
        size_t eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError("noise arguments must look like key=value");
        }
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        if (comma == std::string_view::npos) {
            break;
        }
        args.remove_prefix(comma + 1);
    }
    return out;
}

double require_field(
    const std::vector<std::pair<std::string_view, std::string_view>> &kv, std::string_view key) {
    for (auto &[k, v] : kv) {
        if (k == key) {
            return parse_double_field(v, std::string(key));
        }
    }
    throw UsageError("missing noise argument '" + std::string(key) + "'");
}

}  // namespace

NoiseSpec NoiseSpec::make_depolarizing(double p) {
    NoiseSpec s;
    s.kind = Kind::kDepolarizing;
    s.p = p;
    s.channel = depolarizing(p);
    return s;
}

NoiseSpec NoiseSpec::make_phase_flip(double p) {
    NoiseSpec s;
    s.kind = Kind::kPhaseFlip;
    s.p = p;
    s.channel = phase_flip(p);
    return s;
}

NoiseSpec NoiseSpec::make_interpolated(double p, double delta) {
    NoiseSpec s;
    s.kind = Kind::kInterpolated;
    s.p = p;
    s.delta = delta;
    s.channel = interpolated(p, delta);
    return s;
}

NoiseSpec NoiseSpec::parse(std::string_view text) {
    size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw UsageError(
            "noise spec must look like 'depolarizing:p=0.15', 'phaseflip:p=0.1', "
            "'interp:p=0.15,delta=0.02' or 'pauli:px=..,py=..,pz=..'");
    }
    std::string_view name = text.substr(0, colon);
    auto kv = parse_kv(text.substr(colon + 1));
    if (name == "depolarizing") {
        return make_depolarizing(require_field(kv, "p"));
    }
    if (name == "phaseflip") {
        return make_phase_flip(require_field(kv, "p"));
    }
    if (name == "interp") {
        return make_interpolated(require_field(kv, "p"), require_field(kv, "delta"));
    }
    if (name == "pauli") {
        NoiseSpec s;
        s.kind = Kind::kPauli;
        s.channel = PauliChannel::make(
            require_field(kv, "px"), require_field(kv, "py"), require_field(kv, "pz"));
        s.p = s.channel.px + s.channel.py + s.channel.pz;
        return s;
    }
    throw UsageError("unknown noise family '" + std::string(name) + "'");
}

std::string NoiseSpec::str() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::kDepolarizing:
            out << "depolarizing:p=" << p;
            break;
        case Kind::kPhaseFlip:
            out << "phaseflip:p=" << p;
            break;
        case Kind::kInterpolated:
            out << "interp:p=" << p << ",delta=" << delta;
            break;
        case Kind::kPauli:
            out << "pauli:px=" << channel.px << ",py=" << channel.py << ",pz=" << channel.pz;
            break;
    }
    return out.str();
}

}  // namespace graphfid
