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

#include "graphfid/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "graphfid/analytic.hpp"
#include "graphfid/errors.hpp"
#include "graphfid/rng.hpp"
#include "parallel.hpp"

namespace graphfid {

namespace {

constexpr uint64_t kTrialSalt = 0x74726961; // "tria"

struct SupportQubit {
    uint32_t qubit;
    Pauli letter;
};

// The outcome only depends on the channel restricted to the support and on
// which error letters anticommute there.
std::vector<SupportQubit> compile_support(const PauliString &s) {
    std::vector<SupportQubit> support;
    support.reserve(s.support());
    for (size_t q = 0; q < s.num_qubits(); q++) {
        Pauli letter = s.letter(q);
        if (letter != Pauli::I) {
            support.push_back({static_cast<uint32_t>(q), letter});
        }
    }
    return support;
}

int sample_outcome_compiled(
    const std::vector<SupportQubit> &support, const PauliChannel &ch, uint64_t seed, uint64_t sample_index) {
    // Fixed letter order I, X, Y, Z via inverse CDF, for bit-exact streams.
    double c_i = ch.p0();
    double c_x = c_i + ch.px;
    double c_y = c_x + ch.py;
    int parity = 0;
    for (const auto &sq : support) {
        double u = counter_uniform(seed, sample_index, sq.qubit);
        Pauli err;
        if (u < c_i) {
            err = Pauli::I;
        } else if (u < c_x) {
            err = Pauli::X;
        } else if (u < c_y) {
            err = Pauli::Y;
        } else {
            err = Pauli::Z;
        }
        if (err != Pauli::I && err != sq.letter) {
            parity ^= 1;
        }
    }
    return parity ? -1 : 1;
}

ProtocolReport run_compiled(
    const std::vector<SupportQubit> &support,
    const PauliChannel &ch,
    uint64_t samples,
    uint64_t seed,
    unsigned threads) {
    if (samples == 0) {
        throw UsageError("sample count must be positive");
    }
    constexpr uint64_t kChunk = 1 << 16;
    uint64_t num_chunks = (samples + kChunk - 1) / kChunk;
    std::vector<int64_t> partial(num_chunks, 0);
    internal::run_blocks(num_chunks, threads, [&](size_t b) {
        uint64_t begin = b * kChunk;
        uint64_t end = std::min(samples, begin + kChunk);
        int64_t acc = 0;
        for (uint64_t i = begin; i < end; i++) {
            acc += sample_outcome_compiled(support, ch, seed, i);
        }
        partial[b] = acc;
    });
    ProtocolReport report;
    report.samples = samples;
    report.seed = seed;
    for (int64_t v : partial) {
        report.outcome_sum += v;
    }
    report.estimate = static_cast<double>(report.outcome_sum) / static_cast<double>(samples);
    return report;
}

void reject_isolated(const Graph &g) {
    auto isolated = g.isolated_vertices();
    if (!isolated.empty()) {
        throw UsageError(
            "graph has isolated vertices (first: " + std::to_string(isolated.front()) +
            "); verify them separately and run the protocol on the connected part");
    }
}

}  // namespace

uint64_t hoeffding_samples(double epsilon, double delta) {
    if (!(epsilon > 0) || epsilon > 2) {
        throw UsageError("epsilon must lie in (0, 2]");
    }
    if (!(delta > 0) || !(delta < 1)) {
        throw UsageError("delta must lie in (0, 1)");
    }
    double n = std::ceil(2.0 / (epsilon * epsilon) * std::log(2.0 / delta));
    return std::max<uint64_t>(1, static_cast<uint64_t>(n));
}

int sample_outcome(const PauliString &s, const PauliChannel &ch, uint64_t seed, uint64_t sample_index) {
    return sample_outcome_compiled(compile_support(s), ch, seed, sample_index);
}

ProtocolReport run_protocol(
    const Graph &g,
    const StabilizerIndex &index,
    const PauliChannel &ch,
    uint64_t samples,
    uint64_t seed,
    unsigned threads) {
    reject_isolated(g);
    PauliString s = stabilizer(g, index);
    return run_compiled(compile_support(s), ch, samples, seed, threads);
}

ProtocolReport run_protocol(
    const Graph &g,
    const PauliString &s,
    const PauliChannel &ch,
    uint64_t samples,
    uint64_t seed,
    unsigned threads) {
    reject_isolated(g);
    switch (membership(g, s)) {
        case Membership::kPlus:
            break;
        case Membership::kMinus:
            throw UsageError("the pauli string is the negative of a stabilizer; pass its +1 form");
        case Membership::kNotAMember:
            throw UsageError("the given pauli string is not a stabilizer of this graph");
    }
    return run_compiled(compile_support(s), ch, samples, seed, threads);
}

double coverage_trials(
    const Graph &g,
    const StabilizerIndex &index,
    const PauliChannel &ch,
    double epsilon,
    double delta,
    uint64_t trials,
    uint64_t seed,
    unsigned threads) {
    if (trials == 0) {
        throw UsageError("trial count must be positive");
    }
    reject_isolated(g);
    uint64_t samples = hoeffding_samples(epsilon, delta);
    PauliString s = stabilizer(g, index);
    auto support = compile_support(s);
    double expected = stabilizer_expectation(ch, s.counts());
    std::vector<uint8_t> hits(trials, 0);
    internal::run_blocks(trials, threads, [&](size_t t) {
        uint64_t trial_seed = counter_hash(seed, kTrialSalt, t);
        ProtocolReport r = run_compiled(support, ch, samples, trial_seed, 1);
        hits[t] = std::abs(expected - r.estimate) <= epsilon ? 1 : 0;
    });
    uint64_t total = 0;
    for (uint8_t h : hits) {
        total += h;
    }
    return static_cast<double>(total) / static_cast<double>(trials);
}

}  // namespace graphfid
