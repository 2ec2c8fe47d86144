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

#include "graphfid/gf2.hpp"

#include <bit>

#include "graphfid/errors.hpp"

namespace graphfid {

namespace {

size_t lowest_set_bit(const BitVec &v) {
    auto words = v.words();
    for (size_t k = 0; k < words.size(); k++) {
        if (words[k]) {
            return (k << 6) + std::countr_zero(words[k]);
        }
    }
    return v.size();
}

}  // namespace

Gf2Solver::Gf2Solver(std::vector<BitVec> rows) : num_rows_(rows.size()) {
    if (!rows.empty()) {
        width_ = rows[0].size();
    }
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != width_) {
            throw UsageError("gf2 rows must all have the same width");
        }
        BitVec row = rows[r];
        BitVec combo(num_rows_);
        combo.set_bit(r, true);
        for (size_t e = 0; e < echelon_.size(); e++) {
            if (row.bit(pivot_[e])) {
                row ^= echelon_[e];
                combo ^= combo_[e];
            }
        }
        if (row.none()) {
            continue;  // linearly dependent row
        }
        size_t p = lowest_set_bit(row);
        // Back-substitute into existing rows so each pivot column stays unique.
        for (size_t e = 0; e < echelon_.size(); e++) {
            if (echelon_[e].bit(p)) {
                echelon_[e] ^= row;
                combo_[e] ^= combo;
            }
        }
        echelon_.push_back(std::move(row));
        combo_.push_back(std::move(combo));
        pivot_.push_back(p);
    }
}

std::optional<BitVec> Gf2Solver::solve(const BitVec &target) const {
    if (target.size() != width_) {
        throw UsageError("gf2 target width mismatch");
    }
    BitVec residue = target;
    BitVec combo(num_rows_);
    for (size_t e = 0; e < echelon_.size(); e++) {
        if (residue.bit(pivot_[e])) {
            residue ^= echelon_[e];
            combo ^= combo_[e];
        }
    }
    if (!residue.none()) {
        return std::nullopt;
    }
    return combo;
}

std::optional<BitVec> gf2_solve(const std::vector<BitVec> &rows, const BitVec &target) {
    return Gf2Solver(rows).solve(target);
}

}  // namespace graphfid
