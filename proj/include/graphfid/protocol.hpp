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

#ifndef GRAPHFID_PROTOCOL_HPP
#define GRAPHFID_PROTOCOL_HPP

#include <cstdint>
#include <optional>

#include "graphfid/channel.hpp"
#include "graphfid/graph.hpp"
#include "graphfid/pauli.hpp"
#include "graphfid/stabilizer.hpp"

namespace graphfid {

/// Outcome of one verification run: N single-setting measurements and the
/// resulting estimate (outcome_sum / N). Fully reproducible from the seed.
struct ProtocolReport {
    uint64_t samples = 0;
    int64_t outcome_sum = 0;
    double estimate = 0;
    uint64_t seed = 0;
    std::optional<double> epsilon;
    std::optional<double> delta;
};

/// Sample count ceil(2/eps^2 * ln(2/delta)) from the Hoeffding inequality
/// (natural logarithm). Requires 0 < eps <= 2 and 0 < delta < 1.
uint64_t hoeffding_samples(double epsilon, double delta);

/// One simulated measurement of stabilizer `s` on a noisy graph state:
/// draws an error letter per support qubit (inverse CDF over I, X, Y, Z,
/// keyed by (seed, sample_index, qubit)) and returns (-1)^(#anticommuting).
/// The sign of `s` plays no role since S|G> = |G> absorbs it.
int sample_outcome(const PauliString &s, const PauliChannel &ch, uint64_t seed, uint64_t sample_index);

/// Runs the three-step protocol: N independent outcomes of the stabilizer
/// selected by `index`, averaged into the estimate. Counter-based randomness
/// makes the report identical for any worker count.
ProtocolReport run_protocol(
    const Graph &g,
    const StabilizerIndex &index,
    const PauliChannel &ch,
    uint64_t samples,
    uint64_t seed,
    unsigned threads = 0);

/// Same protocol, but the stabilizer arrives as an explicit Pauli string;
/// rejects strings that are not in the stabilizer group.
ProtocolReport run_protocol(
    const Graph &g,
    const PauliString &s,
    const PauliChannel &ch,
    uint64_t samples,
    uint64_t seed,
    unsigned threads = 0);

/// Fraction of `trials` protocol runs (at the Hoeffding sample count for
/// (epsilon, delta)) whose estimate lands within epsilon of the closed-form
/// expectation. Should be at least 1 - delta up to binomial fluctuation.
double coverage_trials(
    const Graph &g,
    const StabilizerIndex &index,
    const PauliChannel &ch,
    double epsilon,
    double delta,
    uint64_t trials,
    uint64_t seed,
    unsigned threads = 0);

}  // namespace graphfid

#endif
