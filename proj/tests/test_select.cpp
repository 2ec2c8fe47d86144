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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "graphfid/errors.hpp"
#include "graphfid/select.hpp"

using namespace graphfid;

TEST_CASE("set A of the 2x4 cluster contains the canonical pattern") {
    Graph grid = Graph::grid({2, 4});
    auto results = find_set_a(grid);
    CHECK(!results.empty());
    bool found = false;
    for (const auto &r : results) {
        CHECK(r.counts.n_i == 2);
        if (r.index.str() == "10101010") {
            found = true;
            CHECK(r.string.str() == "+XZXIXZXI");
            CHECK(r.satisfies_dual);
        }
    }
    CHECK(found);
}

TEST_CASE("set A of K_8 is exactly the weight-6 indices") {
    Graph k8 = Graph::complete(8);
    auto results = find_set_a(k8);
    CHECK(results.size() == 28);
    std::set<std::string> got;
    for (const auto &r : results) {
        CHECK(weight(r.index) == 6);
        CHECK(r.counts.n_i == 2);
        got.insert(r.index.str());
    }
    CHECK(got.size() == 28);
}

TEST_CASE("set A is empty for K_4 and K_12") {
    CHECK(find_set_a(Graph::complete(4)).empty());
    CHECK(find_set_a(Graph::complete(12)).empty());
}

TEST_CASE("find_set_a validates domain and capacity") {
    CHECK_THROWS_AS(find_set_a(Graph::complete(6)), TheoremDomainError);
    EnumOptions tiny;
    tiny.cap = 4;
    CHECK_THROWS_AS(find_set_a(Graph::complete(8), SIZE_MAX, tiny), CapacityError);
}

TEST_CASE("limit cuts the scan short") {
    Graph k8 = Graph::complete(8);
    CHECK(find_set_a(k8, 5).size() == 5);
    CHECK(find_set_a(k8, 0).empty());
}

TEST_CASE("lexicographically first member") {
    Graph k8 = Graph::complete(8);
    auto best = lexicographically_first_set_a(k8);
    REQUIRE(best.has_value());
    CHECK(best->index.str() == "00111111");
    CHECK(!lexicographically_first_set_a(Graph::complete(4)).has_value());
}

TEST_CASE("fully connected pattern") {
    SelectionResult r8 = fully_connected_pattern(8);
    CHECK(weight(r8.index) == 6);
    CHECK(r8.counts.n_i == 2);
    SelectionResult r16 = fully_connected_pattern(16);
    CHECK(weight(r16.index) == 12);
    CHECK(r16.counts.n_i == 4);
    CHECK_THROWS_AS(fully_connected_pattern(12), TheoremDomainError);
    CHECK_THROWS_AS(fully_connected_pattern(4), TheoremDomainError);
}

TEST_CASE("cluster tiling pattern") {
    TilingResult base = cluster_tiling_pattern(1, 1);
    CHECK(!base.used_search_fallback);
    CHECK(base.result.index.str() == "10101010");
    CHECK(base.result.string.str() == "+XZXIXZXI");
    CHECK(base.result.satisfies_dual);

    TilingResult square = cluster_tiling_pattern(1, 2);  // 4x4 grid
    CHECK(!square.used_search_fallback);
    CHECK(weight(square.result.index) == 8);
    CHECK(square.result.counts.n_i == 4);
    CHECK(square.result.satisfies_dual);

    TilingResult wide = cluster_tiling_pattern(2, 1);  // 2x8 grid
    CHECK(!wide.used_search_fallback);
    CHECK(weight(wide.result.index) == 8);
    CHECK(wide.result.counts.n_i == 4);

    // Stays constructive well past the enumeration cap (here 12x16 = 192 qubits).
    TilingResult big = cluster_tiling_pattern(4, 6);
    CHECK(!big.used_search_fallback);
    CHECK(weight(big.result.index) == 96);
    CHECK(big.result.counts.n_i == 48);

    CHECK_THROWS_AS(cluster_tiling_pattern(0, 1), UsageError);
}

TEST_CASE("dual condition filter") {
    Graph grid = Graph::grid({2, 4});
    auto dual = dual_condition_filter(find_set_a(grid));
    CHECK(!dual.empty());
    bool found = false;
    for (const auto &r : dual) {
        CHECK(weight(r.index) == 4);
        CHECK(r.counts.n_i == 2);
        found = found || r.index.str() == "10101010";
    }
    CHECK(found);

    // All of K_8's set A has wt = 6 != n/2 = 4, so the filter empties it.
    CHECK(dual_condition_filter(find_set_a(Graph::complete(8))).empty());
    CHECK(dual_condition_filter({}).empty());
}

TEST_CASE("selected strings satisfy the even-neighbor rule") {
    // Any unselected qubit carrying I must see an even number of selected
    // neighbors.
    for (const Graph &g : {Graph::grid({2, 4}), Graph::grid({3, 4}), Graph::complete(8)}) {
        auto results = find_set_a(g, 64);
        for (const auto &r : results) {
            for (int v = 0; v < g.num_vertices(); v++) {
                if (!r.index.bit(v) && r.string.letter(v) == Pauli::I) {
                    size_t selected_neighbors = BitVec::popcount_and(g.neighbors(v), r.index);
                    CHECK(selected_neighbors % 2 == 0);
                }
            }
        }
    }
}

TEST_CASE("set A members share the depolarizing expectation") {
    Graph grid = Graph::grid({2, 4});
    for (const auto &r : find_set_a(grid)) {
        double expectation = stabilizer_expectation(depolarizing(0.15), r.counts);
        CHECK(expectation == doctest::Approx(powi(1 - 0.2, 6)).epsilon(1e-12));
    }
}
