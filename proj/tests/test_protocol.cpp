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

#include <cmath>

#include "doctest.h"
#include "graphfid/analytic.hpp"
#include "graphfid/errors.hpp"
#include "graphfid/protocol.hpp"
#include "graphfid/select.hpp"

using namespace graphfid;

TEST_CASE("hoeffding sample counts") {
    CHECK(hoeffding_samples(0.05, 0.01) == 4239);
    CHECK(hoeffding_samples(0.1, 0.05) == 738);
    CHECK(hoeffding_samples(2.0, 1.0 - 1e-9) >= 1);
    CHECK_THROWS_AS(hoeffding_samples(0.0, 0.01), UsageError);
    CHECK_THROWS_AS(hoeffding_samples(2.5, 0.01), UsageError);
    CHECK_THROWS_AS(hoeffding_samples(0.1, 0.0), UsageError);
    CHECK_THROWS_AS(hoeffding_samples(0.1, 1.0), UsageError);
}

TEST_CASE("noiseless outcomes are always +1") {
    Graph grid = Graph::grid({2, 4});
    PauliString s = stabilizer(grid, BitVec::from_string("10101010"));
    for (uint64_t i = 0; i < 64; i++) {
        CHECK(sample_outcome(s, depolarizing(0.0), 42, i) == 1);
    }
    ProtocolReport r = run_protocol(grid, BitVec::from_string("10101010"), depolarizing(0.0), 1000, 5);
    CHECK(r.estimate == 1.0);
    CHECK(r.outcome_sum == 1000);
}

TEST_CASE("deterministic single-qubit flips") {
    // tau = X with a guaranteed Z error anticommutes every time.
    PauliString x1 = PauliString::from_text("X");
    PauliChannel always_z = PauliChannel::make(0.0, 0.0, 1.0);
    for (uint64_t i = 0; i < 32; i++) {
        CHECK(sample_outcome(x1, always_z, 9, i) == -1);
    }
    // A guaranteed X error commutes with tau = X.
    PauliChannel always_x = PauliChannel::make(1.0, 0.0, 0.0);
    CHECK(sample_outcome(x1, always_x, 9, 0) == 1);
}

TEST_CASE("outcome mean converges to the closed-form expectation") {
    Graph k8 = Graph::complete(8);
    StabilizerIndex index = fully_connected_pattern(8).index;
    PauliString s = stabilizer(k8, index);
    PauliChannel ch = depolarizing(0.15);
    double expected = stabilizer_expectation(ch, s.counts());  // 0.8^6

    const uint64_t n = 200000;
    ProtocolReport r = run_protocol(k8, index, ch, n, 11);
    double se = std::sqrt((1 - expected * expected) / static_cast<double>(n));
    CHECK(std::abs(r.estimate - expected) < 4 * se);

    // Also for a general channel (mechanism must match the tensor factors).
    PauliChannel skew = PauliChannel::make(0.02, 0.07, 0.11);
    double expected_skew = stabilizer_expectation(skew, s.counts());
    ProtocolReport r2 = run_protocol(k8, index, skew, n, 12);
    double se2 = std::sqrt((1 - expected_skew * expected_skew) / static_cast<double>(n));
    CHECK(std::abs(r2.estimate - expected_skew) < 4 * se2);
}

TEST_CASE("reports are reproducible and worker-count independent") {
    Graph grid = Graph::grid({2, 4});
    StabilizerIndex index = BitVec::from_string("10101010");
    PauliChannel ch = interpolated(0.15, 0.02);
    ProtocolReport a = run_protocol(grid, index, ch, 100000, 321, 1);
    ProtocolReport b = run_protocol(grid, index, ch, 100000, 321, 1);
    ProtocolReport c = run_protocol(grid, index, ch, 100000, 321, 8);
    CHECK(a.outcome_sum == b.outcome_sum);
    CHECK(a.estimate == b.estimate);
    CHECK(a.outcome_sum == c.outcome_sum);
    CHECK(a.estimate == c.estimate);
    // Parity invariant of +-1 sums.
    CHECK(((a.outcome_sum % 2 + 2) % 2) == (int64_t)(a.samples % 2));
}

TEST_CASE("outcomes depend only on the support letters") {
    // Same support letters on different qubit counts, same seeds: the stream
    // consumed per (sample, qubit) coordinate is identical.
    PauliString small = PauliString::from_text("XZ");
    PauliString padded = PauliString::from_text("XZII");
    PauliChannel ch = depolarizing(0.3);
    for (uint64_t i = 0; i < 200; i++) {
        CHECK(sample_outcome(small, ch, 77, i) == sample_outcome(padded, ch, 77, i));
    }
}

TEST_CASE("sign does not enter the outcome stream") {
    Graph k2 = Graph::complete(2);
    PauliString plus = stabilizer(k2, BitVec::from_string("11"));
    PauliString minus(plus.x_bits(), plus.z_bits(), plus.phase_xz() + 2);
    PauliChannel ch = depolarizing(0.4);
    for (uint64_t i = 0; i < 100; i++) {
        CHECK(sample_outcome(plus, ch, 5, i) == sample_outcome(minus, ch, 5, i));
    }
}

TEST_CASE("protocol rejects bad inputs") {
    Graph grid = Graph::grid({2, 4});
    CHECK_THROWS_AS(run_protocol(grid, BitVec::from_string("10101010"), depolarizing(0.1), 0, 1),
                    UsageError);
    Graph with_isolated(3, {{0, 1}});
    CHECK_THROWS_AS(run_protocol(with_isolated, BitVec::from_string("100"), depolarizing(0.1), 10, 1),
                    UsageError);
    Graph k2 = Graph::complete(2);
    CHECK_THROWS_AS(run_protocol(k2, PauliString::from_text("XX"), depolarizing(0.1), 10, 1), UsageError);
    CHECK_THROWS_AS(run_protocol(k2, PauliString::from_text("-YY"), depolarizing(0.1), 10, 1), UsageError);
    ProtocolReport ok = run_protocol(k2, PauliString::from_text("YY"), depolarizing(0.1), 10, 1);
    CHECK(ok.samples == 10);
}

TEST_CASE("coverage trials") {
    Graph grid = Graph::grid({2, 4});
    StabilizerIndex index = BitVec::from_string("10101010");
    CHECK(coverage_trials(grid, index, depolarizing(0.0), 0.05, 0.01, 5, 1) == 1.0);
    double single = coverage_trials(grid, index, depolarizing(0.15), 0.05, 0.01, 1, 2);
    CHECK((single == 0.0 || single == 1.0));
    // 50 trials at the Hoeffding count: actual coverage is ~0.999.
    double cov = coverage_trials(grid, index, depolarizing(0.15), 0.05, 0.01, 50, 3);
    CHECK(cov >= 0.9);
    // Worker-count independence.
    CHECK(cov == coverage_trials(grid, index, depolarizing(0.15), 0.05, 0.01, 50, 3, 7));
}
