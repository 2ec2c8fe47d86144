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

#ifndef GRAPHFID_SELECT_HPP
#define GRAPHFID_SELECT_HPP

#include <optional>
#include <vector>

#include "graphfid/analytic.hpp"
#include "graphfid/graph.hpp"
#include "graphfid/pauli.hpp"
#include "graphfid/stabilizer.hpp"

namespace graphfid {

/// A measurement setting: a stabilizer with exactly n/4 identity letters.
/// `satisfies_dual` marks the stronger wt = n/2 condition that also covers
/// phase-flip noise.
struct SelectionResult {
    StabilizerIndex index;
    PauliString string;
    PauliCounts counts;
    bool satisfies_dual = false;
};

/// Exhaustively scans the group (Gray order, early exit at `limit`) for
/// stabilizers with nI = n/4. An empty result is a valid outcome. Requires
/// n divisible by 4 and n within the enumeration cap.
std::vector<SelectionResult> find_set_a(
    const Graph &g, size_t limit = SIZE_MAX, const EnumOptions &opts = {});

/// The member of the set whose index bit string sorts first (bit 0 most
/// significant), or nullopt when the set is empty. All members share the same
/// expectation under depolarizing noise, so the choice only pins determinism.
std::optional<SelectionResult> lexicographically_first_set_a(
    const Graph &g, const EnumOptions &opts = {});

/// Constructive pattern for K_n with n = 8k: select the first 3n/4
/// generators. For n = 4k with odd k no valid stabilizer exists at all.
SelectionResult fully_connected_pattern(int n);

struct TilingResult {
    SelectionResult result;
    /// True when the replicated block pattern failed verification and the
    /// result came from an exhaustive dual-condition search instead.
    bool used_search_fallback = false;
};

/// Measurement setting for a (2r) x (4q) boustrophedon cluster, built by
/// replicating the 2x4 generator choice per 2x4 block (mirrored on alternate
/// block columns). The result is always re-verified to satisfy wt = n/2 and
/// nI = n/4; on failure it falls back to an exhaustive search within the cap.
TilingResult cluster_tiling_pattern(int q, int r);

/// Keeps the results that also satisfy wt(index) = n/2.
std::vector<SelectionResult> dual_condition_filter(const std::vector<SelectionResult> &results);

}  // namespace graphfid

#endif
